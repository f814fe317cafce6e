"""
Tests of group orders, enumeration strategies and brute-force periodic counts.
"""

import numpy as np
import pytest

from src.algebra.field import field_for_order
from src.algebra.matrix import Matrix
from src.algebra.poly import Poly
from src.constants import ENV_CACHE_DIR, EnumerationMethod, GroupFamily
from src.dynamics.orbit import orbit_report
from src.errors import GuardExceededError, HypothesisError
from src.groups.brute import brute_periodic_count, centralizer_order_brute, power_map_closed
from src.groups.enumerate import cache_path, choose_method, enumerate_group, group_elements, \
    load_cached, sl2_elements
from src.groups.kinds import GroupKind, gl_order, group_order, is_member, orthogonal_order, \
    symplectic_form

ORDER_CASES: list[tuple[GroupKind, int]] = [
    (GroupKind(GroupFamily.M, 2, 3), 81),
    (GroupKind(GroupFamily.GL, 2, 3), 48),
    (GroupKind(GroupFamily.GL, 3, 2), 168),
    (GroupKind(GroupFamily.SP, 2, 5), 120),
    (GroupKind(GroupFamily.SP, 4, 3), 51840),
    (GroupKind(GroupFamily.U, 2, 3), 96),
    (GroupKind(GroupFamily.U, 3, 3), 24192),
]

# groups small enough to scan every matrix
ENUMERATION_CASES: list[GroupKind] = [
    GroupKind(GroupFamily.GL, 2, 3),
    GroupKind(GroupFamily.SP, 2, 3),
    GroupKind(GroupFamily.U, 2, 2),
    GroupKind(GroupFamily.U, 2, 3),
]

BRUTE_CASES: list[tuple[GroupKind, int, int]] = [
    (GroupKind(GroupFamily.M, 2, 3), 2, 22),
    (GroupKind(GroupFamily.GL, 2, 3), 2, 9),
    (GroupKind(GroupFamily.GL, 2, 3), 7, 48),
    (GroupKind(GroupFamily.GL, 1, 7), 3, 2),
    (GroupKind(GroupFamily.SP, 2, 5), 3, 80),
    (GroupKind(GroupFamily.SP, 2, 13), 3, 1456),
]


def test_orders() -> None:
    for kind, expected in ORDER_CASES:
        assert group_order(kind) == expected
    assert gl_order(0, 5) == 1
    assert orthogonal_order(2, 3, 1) == 4
    assert orthogonal_order(2, 3, -1) == 8
    assert orthogonal_order(3, 3) == 48

    with pytest.raises(HypothesisError):
        orthogonal_order(3, 4)
    with pytest.raises(HypothesisError):
        orthogonal_order(2, 3, 0)


def test_invalid_kinds() -> None:
    with pytest.raises(HypothesisError):
        GroupKind(GroupFamily.SP, 3, 3)
    with pytest.raises(HypothesisError):
        GroupKind(GroupFamily.GL, 2, 6)
    with pytest.raises(HypothesisError):
        GroupKind(GroupFamily.M, 0, 3)


def test_choose_method() -> None:
    assert choose_method(GroupKind(GroupFamily.GL, 2, 3)) == EnumerationMethod.FILTER
    assert choose_method(GroupKind(GroupFamily.U, 2, 3)) == EnumerationMethod.FILTER
    assert choose_method(GroupKind(GroupFamily.SP, 2, 67)) == EnumerationMethod.SL2
    assert choose_method(GroupKind(GroupFamily.SP, 4, 3)) == EnumerationMethod.CLOSURE
    assert choose_method(GroupKind(GroupFamily.U, 3, 3)) == EnumerationMethod.CLOSURE


def test_enumeration_sizes() -> None:
    for kind in ENUMERATION_CASES:
        elements = list(enumerate_group(kind))
        assert len(elements) == group_order(kind)
        assert len({a.key() for a in elements}) == len(elements)
        assert all(is_member(kind, a) for a in elements[:50])


def test_membership() -> None:
    kind = GroupKind(GroupFamily.SP, 4, 3)
    assert is_member(kind, symplectic_form(kind.field, 4))
    assert is_member(kind, Matrix.identity(kind.field, 4))
    assert not is_member(kind, Matrix.diag(kind.field, [2, 1, 1, 1]))

    with pytest.raises(ValueError):
        is_member(kind, Matrix.identity(kind.field, 2))


def test_sl2_parametrisation() -> None:
    kind = GroupKind(GroupFamily.SP, 2, 5)
    mats = sl2_elements(kind.field)
    assert mats.shape == (120, 2, 2, 1)
    assert np.unique(mats.reshape(120, -1), axis=0).shape[0] == 120
    assert all(is_member(kind, Matrix(kind.field, m)) for m in mats)

    filtered = group_elements(kind, EnumerationMethod.FILTER)
    assert {m.tobytes() for m in filtered.astype(np.int64)} == \
        {m.tobytes() for m in mats.astype(np.int64)}


def test_closure() -> None:
    """
    Closure from random transvections reaches the whole symplectic group
    """
    for kind in (GroupKind(GroupFamily.SP, 2, 3), GroupKind(GroupFamily.SP, 4, 2)):
        elements = group_elements(kind, EnumerationMethod.CLOSURE)
        assert elements.shape[0] == group_order(kind)
        assert np.unique(elements.reshape(elements.shape[0], -1), axis=0).shape[0] \
            == group_order(kind)

    with pytest.raises(GuardExceededError):
        group_elements(GroupKind(GroupFamily.SP, 4, 3), EnumerationMethod.CLOSURE,
                       closure_guard=1000)


def test_cache(monkeypatch, tmp_path) -> None:
    kind = GroupKind(GroupFamily.SP, 2, 3)
    monkeypatch.delenv(ENV_CACHE_DIR, raising=False)
    assert cache_path(kind) is None

    monkeypatch.setenv(ENV_CACHE_DIR, str(tmp_path))
    elements = group_elements(kind)
    assert cache_path(kind).exists()
    assert np.array_equal(load_cached(kind), elements)


def test_brute_counts() -> None:
    for kind, L, expected in BRUTE_CASES:
        assert brute_periodic_count(kind, L) == expected, (kind, L)


def test_brute_matches_orbits() -> None:
    kind = GroupKind(GroupFamily.U, 2, 2)
    expected = sum(orbit_report(a, 3).periodic for a in enumerate_group(kind))
    assert brute_periodic_count(kind, 3) == expected


def test_brute_parallel() -> None:
    kind = GroupKind(GroupFamily.GL, 2, 3)
    assert brute_periodic_count(kind, 2, jobs=2) == 9


def test_brute_guard() -> None:
    with pytest.raises(GuardExceededError):
        brute_periodic_count(GroupKind(GroupFamily.M, 3, 3), 2, filter_guard=1000)
    with pytest.raises(HypothesisError):
        brute_periodic_count(GroupKind(GroupFamily.GL, 2, 3), 3)


def test_centralizers() -> None:
    field = field_for_order(3)
    assert centralizer_order_brute(Matrix.from_rows(field, [[1, 1], [0, 1]])) == 6
    assert centralizer_order_brute(Matrix.companion(Poly(field, [1, 0, 1]))) == 8
    assert centralizer_order_brute(Matrix.diag(field, [1, 2])) == 4
    assert centralizer_order_brute(Matrix.identity(field, 2)) == 48


def test_power_map_closed() -> None:
    assert power_map_closed(GroupKind(GroupFamily.SP, 2, 3), 2)
    assert power_map_closed(GroupKind(GroupFamily.U, 2, 2), 3)
