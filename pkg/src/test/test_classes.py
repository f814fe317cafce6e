"""
Tests of partitions, class types, centralizer orders and the class based exact counts.
"""

from fractions import Fraction

import pytest
from tabulate import tabulate

from src.algebra.field import field_for_order
from src.algebra.poly import necklace_count
from src.classes.class_type import ClassType, class_types, gl_centralizer_order, representative
from src.classes.exact_count import assignment_count, class_size, exact_periodic_count, \
    m2_closed, m2_contributions, m3_closed, m3_contributions, periodic_ratio
from src.classes.partitions import Partition, partitions, split_partitions
from src.constants import GroupFamily
from src.errors import HypothesisError
from src.groups.brute import brute_periodic_count, centralizer_order_brute
from src.groups.kinds import GroupKind, gl_order

PARTITION_COUNTS: list[tuple[int, int]] = [(0, 1), (1, 1), (2, 2), (3, 3), (4, 5), (5, 7), (8, 22)]

CENTRALIZER_CASES: list[tuple[ClassType, int, int]] = [
    (ClassType(0, ((1, Partition((2,))),)), 3, 6),
    (ClassType(0, ((1, Partition((1,))), (1, Partition((1,))))), 3, 4),
    (ClassType(0, ((2, Partition((1,))),)), 3, 8),
    (ClassType(0, ((1, Partition((1, 1))),)), 3, 48),
    (ClassType(0, ((1, Partition((2, 1))),)), 2, 8),
]

# (family, n, q, L, strict, expected)
EXACT_CASES: list[tuple[GroupFamily, int, int, int, bool, int]] = [
    (GroupFamily.M, 2, 3, 2, True, 22),
    (GroupFamily.GL, 2, 3, 2, True, 9),
    (GroupFamily.GL, 2, 3, 7, False, 48),
    (GroupFamily.GL, 1, 7, 3, True, 2),
    (GroupFamily.M, 2, 13, 3, True, 6553),
]

# (family, n, q, L, strict) small enough to check by enumeration
BRUTE_CASES: list[tuple[GroupFamily, int, int, int, bool]] = [
    (GroupFamily.M, 2, 5, 2, True),
    (GroupFamily.M, 2, 7, 3, True),
    (GroupFamily.GL, 3, 3, 2, True),
    (GroupFamily.M, 3, 2, 3, False),
    (GroupFamily.M, 3, 3, 2, True),
]


def test_partitions() -> None:
    for ell, expected in PARTITION_COUNTS:
        found = list(partitions(ell))
        assert len(found) == expected
        assert all(lam.size == ell for lam in found)
        assert len(set(found)) == expected

    assert list(partitions(0)) == [Partition(())]
    assert Partition((2, 1, 1)).multiplicities() == {1: 2, 2: 1}
    assert Partition.from_multiplicities({1: 2, 3: 1}) == Partition((3, 1, 1))
    assert repr(Partition((2, 1))) == "(2,1)"

    with pytest.raises(ValueError):
        list(partitions(-1))
    with pytest.raises(ValueError):
        Partition((1, 2))


def test_split_partitions() -> None:
    """
    Pairs with total ell number sum_k p(k) p(ell - k)
    """
    assert len(list(split_partitions(1))) == 2
    assert len(list(split_partitions(2))) == 5
    assert len(list(split_partitions(3))) == 10
    assert all(pair.total == 3 for pair in split_partitions(3))


def test_class_types() -> None:
    assert len(list(class_types(2))) == 4
    assert len(list(class_types(3))) == 8
    assert len(list(class_types(2, zero_mult=1))) == 1
    assert list(class_types(1, zero_mult=2)) == []
    assert all(ct.n == 3 for ct in class_types(3))
    assert sum(ct.is_regular_semisimple() for ct in class_types(2)) == 2


def test_centralizer_orders() -> None:
    for ct, q, expected in CENTRALIZER_CASES:
        assert gl_centralizer_order(ct, q) == expected

    with pytest.raises(ValueError):
        gl_centralizer_order(ClassType(1, ()), 3)


def test_centralizers_match_enumeration() -> None:
    """
    Centralizer orders of realizable class types agree with a scan of GL_n(q)
    """
    for n, q in [(2, 3), (3, 2), (2, 4)]:
        field = field_for_order(q)
        for ct in class_types(n):
            rep = representative(ct, field)
            if rep is None:
                continue
            assert centralizer_order_brute(rep) == gl_centralizer_order(ct, q), (ct, q)


def test_class_sizes_partition_gl() -> None:
    """
    Class sizes times the number of ways to choose eigenvalues add up to |GL_n(q)|
    """
    for n, q in [(2, 3), (3, 2), (3, 3)]:
        available = {d: necklace_count(q, d) - (1 if d == 1 else 0) for d in range(1, n + 1)}
        total = sum(assignment_count(ct, available) * class_size(ct, q) for ct in class_types(n))
        assert total == gl_order(n, q)


def test_exact_counts() -> None:
    for family, n, q, L, strict, expected in EXACT_CASES:
        assert exact_periodic_count(family, n, q, L, strict=strict) == expected


def test_exact_matches_brute() -> None:
    for family, n, q, L, strict in BRUTE_CASES:
        expected = brute_periodic_count(GroupKind(family, n, q), L)
        assert exact_periodic_count(family, n, q, L, strict=strict) == expected, (family, n, q)


def test_exact_guards() -> None:
    with pytest.raises(HypothesisError):
        exact_periodic_count(GroupFamily.SP, 2, 5, 3)
    with pytest.raises(HypothesisError):
        exact_periodic_count(GroupFamily.M, 7, 3, 2)
    with pytest.raises(HypothesisError):
        exact_periodic_count(GroupFamily.GL, 2, 3, 7)


def test_exact_parallel() -> None:
    assert exact_periodic_count(GroupFamily.M, 3, 5, 2, jobs=2) == \
        exact_periodic_count(GroupFamily.M, 3, 5, 2)


def test_closed_tables() -> None:
    for q, L in [(3, 2), (5, 2), (7, 3), (13, 3), (59, 2)]:
        assert m2_closed(q, L) == exact_periodic_count(GroupFamily.M, 2, q, L)
        assert m3_closed(q, L) == exact_periodic_count(GroupFamily.M, 3, q, L)
    assert m2_closed(13, 3) == 6553
    assert m3_closed(7, 3, verbatim=True) != m3_closed(7, 3)
    assert len(m2_contributions(3, 2)) == 4
    assert len(m3_contributions(3, 2)) == 8


def test_ratios() -> None:
    """
    GL_2 ratios equal 2/9 exactly when v_3(q - 1) = 1
    """
    for q in (7, 13, 31):
        assert periodic_ratio(GroupFamily.GL, 2, q, 3) == Fraction(2, 9)
    assert periodic_ratio(GroupFamily.M, 2, 3, 2) == Fraction(22, 81)


def test_regular_semisimple_restriction() -> None:
    full = exact_periodic_count(GroupFamily.GL, 2, 13, 3)
    regular = exact_periodic_count(GroupFamily.GL, 2, 13, 3, regular_semisimple_only=True)
    assert 0 < regular < full


def manual_test() -> None:
    """
    Prints the M_3 class table for q = 7, L = 3 with both diag(alpha, alpha, beta) rows
    """
    corrected = dict(m3_contributions(7, 3))
    printed = dict(m3_contributions(7, 3, verbatim=True))
    rows = [{"class type": name, "corrected": value, "printed": printed[name]}
            for name, value in corrected.items()]
    print(tabulate(rows, headers="keys", tablefmt="github"))
    print(f"class sum: {exact_periodic_count(GroupFamily.M, 3, 7, 3)}")
