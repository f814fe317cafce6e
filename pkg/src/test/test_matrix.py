"""
Tests of matrix arithmetic and the characteristic and minimal polynomials.
"""

import pytest

from src.algebra.field import field_for_order
from src.algebra.matrix import Matrix, char_poly, mat_power, min_poly
from src.algebra.poly import Poly

# (q, rows, char poly coefficients constant first)
CHAR_POLY_CASES: list[tuple[int, list[list[int]], list[int] | None]] = [
    (59, [[0, 42], [1, 31]], [17, 28, 1]),
    (3, [[1, 0], [0, 1]], [1, 1, 1]),
    (7, [[1, 0], [0, 2]], [2, 4, 1]),
    (5, [[1, 2, 0], [0, 1, 3], [4, 0, 2]], None),
]

MIN_POLY_CASES: list[tuple[int, list[list[int]], list[int]]] = [
    (3, [[1, 0], [0, 1]], [2, 1]),
    (3, [[1, 1], [0, 1]], [1, 1, 1]),
    (7, [[1, 0], [0, 2]], [2, 4, 1]),
    (5, [[0, 0], [0, 0]], [0, 1]),
    (5, [[0, 1], [0, 0]], [0, 0, 1]),
]


def test_char_poly() -> None:
    for q, rows, coeffs in CHAR_POLY_CASES:
        field = field_for_order(q)
        a = Matrix.from_rows(field, rows)
        f = char_poly(a)
        assert f.degree == a.n
        assert f.is_monic()
        assert f.constant == a.det() * (-1) ** a.n
        if coeffs is not None:
            assert f == Poly(field, coeffs)


def test_min_poly() -> None:
    for q, rows, coeffs in MIN_POLY_CASES:
        field = field_for_order(q)
        assert min_poly(Matrix.from_rows(field, rows)) == Poly(field, coeffs)


def test_companion() -> None:
    """
    The companion matrix of f has characteristic and minimal polynomial f
    """
    for q, coeffs in [(2, [1, 1, 0, 1]), (7, [3, 0, 0, 1]), (4, [1, 1, 0, 1])]:
        field = field_for_order(q)
        f = Poly(field, coeffs)
        c = Matrix.companion(f)
        assert char_poly(c) == f
        assert min_poly(c) == f

    field = field_for_order(9)
    f = Poly(field, [field.gen(), 1, 1])
    assert char_poly(Matrix.companion(f)) == f


def test_power() -> None:
    field = field_for_order(59)
    a = Matrix.from_rows(field, [[0, 42], [1, 31]])
    assert mat_power(a, 2) == Matrix.from_rows(field, [[42, 4], [31, 0]])
    assert mat_power(a, 1) == a
    assert mat_power(a, 5) == a @ a @ a @ a @ a

    with pytest.raises(ValueError):
        mat_power(a, 0)


def test_inverse_and_det() -> None:
    field = field_for_order(7)
    a = Matrix.from_rows(field, [[1, 2], [3, 4]])
    assert a.det() == 5
    assert a @ a.inverse() == Matrix.identity(field, 2)

    with pytest.raises(ZeroDivisionError):
        Matrix.from_rows(field, [[1, 2], [2, 4]]).inverse()

    field = field_for_order(8)
    b = Matrix.from_rows(field, [[field.gen(), 1, 0], [0, 1, field.gen()], [1, 0, field.gen()]])
    assert b.is_invertible()
    assert b.inverse() @ b == Matrix.identity(field, 3)


def test_block_diagonal() -> None:
    field = field_for_order(5)
    j = Matrix.jordan_block(field, 2, 2)
    d = Matrix.diag(field, [3])
    block = Matrix.block_diagonal(field, [j, d])
    assert block == Matrix.from_rows(field, [[2, 1, 0], [0, 2, 0], [0, 0, 3]])
    assert char_poly(block) == char_poly(j) * char_poly(d)


def test_index() -> None:
    field = field_for_order(3)
    for index in (0, 1, 17, 80):
        assert Matrix.from_index(field, 2, index).index == index


def test_transposes() -> None:
    field = field_for_order(9)
    a = Matrix.from_rows(field, [[field.gen(), 1], [0, 2]])
    assert a.transpose().transpose() == a
    assert (a @ a).transpose() == a.transpose() @ a.transpose()
