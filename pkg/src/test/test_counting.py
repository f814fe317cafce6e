"""
Tests of the valuation helpers and the three counting lemmas against the enumeration oracle.
"""

from fractions import Fraction

import numpy as np
import pytest
from tabulate import tabulate

from src.algebra import batch
from src.algebra.field import field_for_order, make_unitary_field
from src.cli.verify import lemma_grid
from src.constants import CountKind, VERIFY_DEFAULT_BUDGET
from src.counting.lemmas import d_plain, d_self_conjugate, d_self_conjugate_verbatim, \
    d_self_reciprocal, d_self_reciprocal_verbatim, e_for_kind
from src.counting.oracle import build_candidates, constant_terms, oracle_count, oracle_size, \
    root_enumeration_count
from src.counting.valuation import CountParams, e_value, l_free, lte_val, v_adic
from src.errors import GuardExceededError, HypothesisError

E_VALUE_CASES: list[tuple[tuple[int, int, int], int]] = [
    ((59, 2, 1), 29),
    ((7, 3, 2), 16),
    ((3, 2, 2), 1),
    ((4, 3, 1), 1),
    ((13, 3, 1), 4),
]

PLAIN_CASES: list[tuple[tuple[int, int, int], int]] = [
    ((59, 2, 1), 29),
    ((7, 3, 2), 7),
    ((3, 2, 2), 0),
    ((4, 3, 2), 2),
    ((9, 2, 2), 2),
]

SELF_RECIPROCAL_CASES: list[tuple[tuple[int, int, int], int, Fraction]] = [
    ((7, 3, 1), 3, Fraction(4)),
    ((7, 3, 2), 12, Fraction(25, 2)),
    ((7, 3, 3), 56, Fraction(56)),
    ((5, 2, 1), 1, Fraction(3, 2)),
]

SELF_CONJUGATE_CASES: list[tuple[tuple[int, int, int], int, Fraction]] = [
    ((4, 3, 1), 5, Fraction(5)),
    ((4, 3, 2), 0, Fraction(6)),
    ((4, 3, 3), 20, Fraction(20)),
    ((7, 3, 1), 8, Fraction(8)),
]

# (kind, q, L, n) small enough for the oracle
ORACLE_CASES: list[tuple[CountKind, int, int, int]] = [
    (CountKind.PLAIN, 7, 3, 1),
    (CountKind.PLAIN, 7, 3, 2),
    (CountKind.PLAIN, 4, 3, 2),
    (CountKind.PLAIN, 9, 2, 2),
    (CountKind.PLAIN, 5, 2, 3),
    (CountKind.SELF_RECIPROCAL, 7, 3, 1),
    (CountKind.SELF_RECIPROCAL, 7, 3, 2),
    (CountKind.SELF_RECIPROCAL, 5, 2, 1),
    (CountKind.SELF_CONJUGATE, 4, 3, 1),
    (CountKind.SELF_CONJUGATE, 4, 3, 2),
    (CountKind.SELF_CONJUGATE, 4, 3, 3),
    (CountKind.SELF_CONJUGATE, 7, 3, 1),
]

# (q, L, n) with q^n small enough to list F_(q^n)
ROOT_ENUMERATION_CASES: list[tuple[int, int, int]] = [
    (7, 3, 2),
    (59, 2, 1),
    (4, 3, 2),
    (3, 2, 2),
    (5, 2, 3),
    (7, 3, 3),
    (4, 3, 3),
    (8, 7, 2),
    (13, 3, 2),
    (16, 5, 2),
    (25, 3, 2),
    (31, 5, 2),
    (9, 2, 3),
    (7, 2, 4),
]

CANDIDATE_CASES: list[tuple[CountKind, int, int, int]] = [
    (CountKind.PLAIN, 7, 3, 3),
    (CountKind.PLAIN, 9, 2, 2),
    (CountKind.SELF_RECIPROCAL, 7, 3, 2),
    (CountKind.SELF_RECIPROCAL, 5, 2, 2),
    (CountKind.SELF_RECIPROCAL, 4, 3, 2),
    (CountKind.SELF_CONJUGATE, 2, 3, 3),
    (CountKind.SELF_CONJUGATE, 3, 2, 2),
    (CountKind.SELF_CONJUGATE, 4, 3, 3),
]


FORMULAS = {
    CountKind.PLAIN: d_plain,
    CountKind.SELF_RECIPROCAL: d_self_reciprocal,
    CountKind.SELF_CONJUGATE: d_self_conjugate,
}


def test_valuations() -> None:
    assert v_adic(3, 18) == 2
    assert v_adic(2, 48) == 4
    assert v_adic(5, 7) == 0
    assert l_free(3, 18) == 2
    assert l_free(2, 48) == 3
    with pytest.raises(ValueError):
        v_adic(3, 0)


def test_lifting_the_exponent() -> None:
    """
    v_L(q^k - 1) = c + v_L(k) against direct valuation
    """
    for q, L in [(7, 3), (13, 3), (31, 5), (19, 3)]:
        c = v_adic(L, q - 1)
        for k in range(1, 10):
            assert lte_val(L, q, k, c) == v_adic(L, q ** k - 1)
    assert lte_val(3, None, 3, 1) == 2

    with pytest.raises(HypothesisError):
        lte_val(2, 5, 1, 2)
    with pytest.raises(HypothesisError):
        lte_val(3, 7, 1, 2)
    with pytest.raises(HypothesisError):
        lte_val(3, None, 1, 0)


def test_e_value() -> None:
    for args, expected in E_VALUE_CASES:
        assert e_value(*args) == expected
    with pytest.raises(HypothesisError):
        e_value(9, 3, 1)


def test_count_params() -> None:
    params = CountParams(7, 3, 2)
    assert params.as_dict() == {"q": 7, "L": 3, "n": 2, "c": 1}
    assert params.delta == 1
    assert CountParams(4, 3).delta == 2
    assert CountParams(4, 3).require_delta_divides_d().c == 1

    for q, L in [(6, 3), (7, 4), (9, 3), (4, 2)]:
        with pytest.raises(HypothesisError):
            CountParams(q, L)
    with pytest.raises(HypothesisError):
        CountParams(7, 3, c=2)
    with pytest.raises(HypothesisError):
        CountParams(2, 3).require_delta_divides_d()
    with pytest.raises(HypothesisError):
        CountParams(5, 3).require_l_divides_q_minus_1()


def test_plain() -> None:
    for args, expected in PLAIN_CASES:
        assert d_plain(*args) == expected

    with pytest.raises(HypothesisError):
        d_plain(2, 3, 1)
    assert d_plain(2, 3, 1, strict=False) == 1


def test_self_reciprocal() -> None:
    for args, expected, printed in SELF_RECIPROCAL_CASES:
        assert d_self_reciprocal(*args) == expected
        assert d_self_reciprocal_verbatim(*args) == printed

    with pytest.raises(HypothesisError):
        d_self_reciprocal(7, 5, 1)
    with pytest.raises(HypothesisError):
        d_self_reciprocal(4, 3, 1)


def test_self_conjugate() -> None:
    for args, expected, printed in SELF_CONJUGATE_CASES:
        assert d_self_conjugate(*args) == expected
        assert d_self_conjugate_verbatim(*args) == printed

    with pytest.raises(HypothesisError):
        d_self_conjugate(7, 2, 1)
    with pytest.raises(HypothesisError):
        d_self_conjugate(5, 3, 1)


def test_formulas_match_oracle() -> None:
    for kind, q, L, n in ORACLE_CASES:
        assert oracle_count(kind, q, L, n) == FORMULAS[kind](q, L, n), (kind, q, L, n)


def test_oracle_guard_and_exponents() -> None:
    # constant terms: +-1, +-1 and the fifth roots of unity in F_16
    assert oracle_size(CountKind.PLAIN, 7, 3, 2) == 2 * 7
    assert oracle_size(CountKind.SELF_RECIPROCAL, 7, 3, 2) == 2 * 7 ** 2
    assert oracle_size(CountKind.SELF_CONJUGATE, 4, 3, 3) == 5 * 16
    assert e_for_kind(CountKind.SELF_RECIPROCAL, 7, 3, 1) == 16
    assert e_for_kind(CountKind.SELF_CONJUGATE, 7, 3, 1) == 16

    with pytest.raises(GuardExceededError):
        oracle_count(CountKind.PLAIN, 7, 3, 3, guard=10)


@pytest.mark.parametrize("q,L,n", ROOT_ENUMERATION_CASES)
def test_root_enumeration(q: int, L: int, n: int) -> None:
    """
    Counting roots in F_(q^n) directly gives the same plain counts
    """
    assert root_enumeration_count(q, n, e_value(q, L, n)) == d_plain(q, L, n)


@pytest.mark.parametrize("kind,q,L,n", CANDIDATE_CASES)
def test_candidates_cover_every_fixed_polynomial(kind: CountKind, q: int, L: int, n: int) -> None:
    """
    The built candidates are exactly the monic polynomials with an admissible constant term
    that the transform fixes
    """
    field = make_unitary_field(q) if kind == CountKind.SELF_CONJUGATE else field_for_order(q)
    degree = 2 * n if kind == CountKind.SELF_RECIPROCAL else n
    consts = constant_terms(kind, field, degree, e_for_kind(kind, q, L, n))
    fixed = {CountKind.PLAIN: lambda f: np.ones(f.shape[0], dtype=bool),
             CountKind.SELF_RECIPROCAL: lambda f: batch.reciprocal_fixed(f, field),
             CountKind.SELF_CONJUGATE: lambda f: batch.conjugate_fixed(f, field)}[kind]

    every = batch.decode_monic(np.arange(field.q ** degree), field, degree)
    admissible = np.isin(batch.encode_digits(every[:, 0], field.p),
                         batch.encode_digits(consts, field.p))
    expected = every[admissible & fixed(every)]

    built = build_candidates(kind, field, degree, consts,
                             np.arange(oracle_size(kind, q, L, n), dtype=np.int64))
    built = built[fixed(built)]
    assert sorted(batch.encode_digits(built.reshape(built.shape[0], -1), field.p)) == \
        sorted(batch.encode_digits(expected.reshape(expected.shape[0], -1), field.p))


def test_lemma_grid_fits_default_budget() -> None:
    """
    No point of the verify lemma grid is skipped at the default budget
    """
    grid = lemma_grid()
    assert {kind for kind, _, _, _ in grid} == set(CountKind)
    assert (CountKind.SELF_RECIPROCAL, 49, 3, 3) in grid
    assert (CountKind.SELF_CONJUGATE, 43, 7, 3) in grid
    assert all(oracle_size(kind, q, L, n) <= VERIFY_DEFAULT_BUDGET for kind, q, L, n in grid)


def manual_test() -> None:
    """
    Prints formula, printed display and oracle side by side
    """
    rows = []
    for kind, q, L, n in ORACLE_CASES:
        rows.append({"kind": kind.value, "q": q, "L": L, "n": n,
                     "formula": FORMULAS[kind](q, L, n),
                     "oracle": oracle_count(kind, q, L, n)})
    print(tabulate(rows, headers="keys", tablefmt="github"))
