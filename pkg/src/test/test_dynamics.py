"""
Tests of orbit iteration and the periodicity predicates.
"""

import numpy as np
import pytest

from src.algebra import batch
from src.algebra.field import field_for_order
from src.algebra.matrix import Matrix, mat_power
from src.dynamics.orbit import OrbitReport, field_orbit_report, orbit_report
from src.dynamics.periodic import field_periodic_points, field_periodic_set, \
    is_field_periodic, is_periodic_power_identity, is_periodic_structural, periodic_mask, \
    power_identity_exponent
from src.errors import GuardExceededError, HypothesisError

CYCLE_EXAMPLE_Q: int = 59
CYCLE_EXAMPLE_ROWS: list[list[int]] = [[0, 42], [1, 31]]

FIELD_PERIODIC_CASES: list[tuple[int, int, int]] = [
    (7, 3, 3),
    (59, 2, 30),
    (7, 5, 7),
    (13, 3, 5),
    (9, 2, 2),
    (16, 3, 6),
]

# (q, rows, L, periodic)
MATRIX_CASES: list[tuple[int, list[list[int]], int, bool]] = [
    (3, [[1, 1], [0, 1]], 2, True),
    (3, [[0, 1], [0, 0]], 2, False),
    (3, [[0, 0], [0, 0]], 2, True),
    (7, [[2, 0], [0, 1]], 3, False),
    (7, [[6, 0], [0, 1]], 3, True),
    (7, [[0, 0], [0, 3]], 3, False),
    (7, [[0, 0], [0, 6]], 3, True),
    (7, [[0, 0, 0], [0, 0, 1], [0, 0, 0]], 3, False),
]


def _cycle_example() -> Matrix:
    return Matrix.from_rows(field_for_order(CYCLE_EXAMPLE_Q), CYCLE_EXAMPLE_ROWS)


def test_cycle_example() -> None:
    """
    The squaring map on this companion matrix over F_59 cycles with period 28
    """
    a = _cycle_example()
    assert orbit_report(a, 2) == OrbitReport(preperiod=0, period=28)
    assert orbit_report(a, 2).periodic
    assert is_periodic_structural(a, 2)
    assert is_periodic_power_identity(a, 2)


def test_orbit_guards() -> None:
    a = _cycle_example()
    with pytest.raises(GuardExceededError):
        orbit_report(a, 2, budget=5)
    with pytest.raises(ValueError):
        orbit_report(a, 1)


def test_field_periodic_points() -> None:
    for q, L, expected in FIELD_PERIODIC_CASES:
        field = field_for_order(q)
        assert field_periodic_points(field, L) == expected
        assert len(field_periodic_set(field, L)) == expected

    field = field_for_order(7)
    assert [x.index for x in field_periodic_set(field, 3)] == [0, 1, 6]

    with pytest.raises(HypothesisError):
        field_periodic_points(field, 7)


def test_field_predicate_matches_orbits() -> None:
    for q in (7, 8, 9, 13):
        field = field_for_order(q)
        for L in (2, 3, 5):
            if q % L == 0:
                continue
            for x in field.elements():
                assert is_field_periodic(x, L) == field_orbit_report(x, L).periodic


def test_matrix_cases() -> None:
    for q, rows, L, expected in MATRIX_CASES:
        a = Matrix.from_rows(field_for_order(q), rows)
        assert is_periodic_structural(a, L) == expected
        assert orbit_report(a, L).periodic == expected
        assert is_periodic_power_identity(a, L) == expected


def test_predicates_agree_on_m2_f3() -> None:
    """
    Structural test, orbit iteration and the power identity agree on all of M_2(3)
    """
    field = field_for_order(3)
    mats = batch.decode_matrices(np.arange(81), field, 2)
    mask = periodic_mask(mats, field, 2)
    structural = [is_periodic_structural(Matrix(field, m), 2) for m in mats]
    orbits = [orbit_report(Matrix(field, m), 2).periodic for m in mats]
    assert list(mask) == structural == orbits
    assert sum(structural) == 22


def test_conjugation_invariance() -> None:
    field = field_for_order(7)
    p = Matrix.from_rows(field, [[1, 1], [0, 1]])
    p_inv = p.inverse()
    for index in range(0, 7 ** 4, 97):
        a = Matrix.from_index(field, 2, index)
        assert is_periodic_structural(a, 3) == is_periodic_structural(p @ a @ p_inv, 3)


def test_periodic_power_is_periodic() -> None:
    field = field_for_order(5)
    for index in range(0, 5 ** 4, 31):
        a = Matrix.from_index(field, 2, index)
        report = orbit_report(a, 2)
        # the cycle is reached after preperiod steps
        assert is_periodic_structural(mat_power(a, 2 ** report.preperiod), 2)


def test_hypothesis_handling() -> None:
    """
    delta_L(p) must divide d in strict mode; relaxed mode still answers
    """
    field = field_for_order(7)
    a = Matrix.from_rows(field, [[0, 1], [1, 1]])
    with pytest.raises(HypothesisError):
        is_periodic_structural(a, 5)
    assert is_periodic_structural(a, 5, strict=False) == orbit_report(a, 5).periodic

    with pytest.raises(HypothesisError):
        is_periodic_structural(a, 7)


def test_power_identity_exponent() -> None:
    assert power_identity_exponent(3, 2, 2) == 3
    assert power_identity_exponent(7, 3, 1) == 2
    assert power_identity_exponent(59, 2, 1) == 29


def manual_test() -> None:
    """
    Prints the orbit of the squaring map on the example matrix over F_59
    """
    a = _cycle_example()
    report = orbit_report(a, 2)
    print(f"A = {a}, L = 2: preperiod {report.preperiod}, period {report.period}")
    state = a
    for step in range(report.period + 1):
        print(f"{step:3d}: {state}")
        state = mat_power(state, 2)
