"""
Square matrices over a FieldSpec.

Entries are held as an int64 residue array of shape (n, n, d) so that a single matrix and a
stack of matrices share the kernels of src.algebra.batch.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from src.algebra import batch
from src.algebra.field import FieldElem, FieldSpec, IntLike
from src.algebra.poly import Poly


class Matrix:
    """
    Dense n x n matrix over a finite field
    """

    # ------------------------------
    # Class fields
    # ------------------------------

    owner: FieldSpec
    n: int
    entries: np.ndarray

    # ------------------------------
    # Class creation
    # ------------------------------

    def __init__(self, owner: FieldSpec, entries: np.ndarray) -> None:
        """
        :param owner: Entry field
        :param entries: Residue array of shape (n, n, d)
        """
        entries = np.asarray(entries, dtype=np.int64) % owner.p
        if entries.ndim != 3 or entries.shape[0] != entries.shape[1] \
                or entries.shape[2] != owner.d:
            raise ValueError(f"expected an (n, n, {owner.d}) residue array, got {entries.shape}")
        self.owner = owner
        self.n = entries.shape[0]
        self.entries = entries

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence[IntLike]]) -> Matrix:
        """
        Builds a matrix from rows of ints (prime subfield) or FieldElems
        """
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError("matrix must be square")
        entries = np.array([[field.coerce(x).coeffs for x in row] for row in rows],
                           dtype=np.int64).reshape(n, n, field.d)
        return cls(field, entries)

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> Matrix:
        return cls(field, batch.mat_identity(1, n, field)[0])

    @classmethod
    def zero(cls, field: FieldSpec, n: int) -> Matrix:
        return cls(field, np.zeros((n, n, field.d), dtype=np.int64))

    @classmethod
    def diag(cls, field: FieldSpec, values: Sequence[IntLike]) -> Matrix:
        n = len(values)
        return cls.from_rows(field, [[values[i] if i == j else 0 for j in range(n)]
                                     for i in range(n)])

    @classmethod
    def jordan_block(cls, field: FieldSpec, value: IntLike, size: int) -> Matrix:
        """
        J_{value,size}: value on the diagonal, ones on the superdiagonal
        """
        return cls.from_rows(field, [[value if i == j else (1 if j == i + 1 else 0)
                                      for j in range(size)] for i in range(size)])

    @classmethod
    def companion(cls, f: Poly) -> Matrix:
        """
        Companion matrix of a monic f: ones on the subdiagonal, -f_i in the last column
        """
        field, n = f.owner, f.degree
        rows = [[field.zero] * n for _ in range(n)]
        for i in range(1, n):
            rows[i][i - 1] = field.one
        for i in range(n):
            rows[i][n - 1] = -f.coeff(i)
        return cls.from_rows(field, rows)

    @classmethod
    def block_diagonal(cls, field: FieldSpec, blocks: Sequence[Matrix]) -> Matrix:
        n = sum(b.n for b in blocks)
        entries = np.zeros((n, n, field.d), dtype=np.int64)
        at = 0
        for b in blocks:
            entries[at:at + b.n, at:at + b.n] = b.entries
            at += b.n
        return cls(field, entries)

    @classmethod
    def from_index(cls, field: FieldSpec, n: int, index: int) -> Matrix:
        return cls(field, batch.decode_matrices(np.array([index]), field, n)[0])

    # ------------------------------
    # Class interaction
    # ------------------------------

    @property
    def index(self) -> int:
        return int(batch.encode_matrices(self.entries[None], self.owner)[0])

    def entry(self, i: int, j: int) -> FieldElem:
        return self.owner.from_array(self.entries[i, j])

    def rows(self) -> list[list[FieldElem]]:
        return [[self.entry(i, j) for j in range(self.n)] for i in range(self.n)]

    def key(self) -> bytes:
        """
        Canonical byte encoding used for hashing and memoisation
        """
        return self.entries.astype(np.uint32).tobytes()

    def _same_shape(self, other: Matrix) -> None:
        if other.owner != self.owner or other.n != self.n:
            raise ValueError("matrix dimension or field mismatch")

    def __matmul__(self, other: Matrix) -> Matrix:
        self._same_shape(other)
        return Matrix(self.owner, batch.mat_mul(self.entries, other.entries, self.owner))

    __mul__ = __matmul__

    def __add__(self, other: Matrix) -> Matrix:
        self._same_shape(other)
        return Matrix(self.owner, self.entries + other.entries)

    def __sub__(self, other: Matrix) -> Matrix:
        self._same_shape(other)
        return Matrix(self.owner, self.entries - other.entries)

    def scale(self, c: IntLike) -> Matrix:
        c = self.owner.coerce(c)
        scalars = np.broadcast_to(np.array(c.coeffs, dtype=np.int64), self.entries.shape)
        return Matrix(self.owner, batch.field_mul(self.entries, scalars, self.owner))

    def transpose(self) -> Matrix:
        return Matrix(self.owner, np.swapaxes(self.entries, 0, 1))

    def conj_transpose(self) -> Matrix:
        """
        A* for a matrix over a field tagged by make_unitary_field
        """
        return Matrix(self.owner, batch.mat_conj_transpose(self.entries, self.owner))

    def det(self) -> FieldElem:
        return self.owner.from_array(batch.mat_det(self.entries, self.owner))

    def is_invertible(self) -> bool:
        return not self.det().is_zero()

    def inverse(self) -> Matrix:
        """
        Gauss-Jordan inverse

        :raises ZeroDivisionError: singular matrix
        """
        n, field = self.n, self.owner
        work = [row + [field.one if i == j else field.zero for j in range(n)]
                for i, row in enumerate(self.rows())]
        for k in range(n):
            pivot = next((r for r in range(k, n) if not work[r][k].is_zero()), None)
            if pivot is None:
                raise ZeroDivisionError("singular matrix")
            work[k], work[pivot] = work[pivot], work[k]
            inv = work[k][k].inverse()
            work[k] = [x * inv for x in work[k]]
            for r in range(n):
                if r != k and not work[r][k].is_zero():
                    factor = work[r][k]
                    work[r] = [x - factor * y for x, y in zip(work[r], work[k])]
        return Matrix.from_rows(field, [row[n:] for row in work])

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Matrix) and self.owner == other.owner
                and np.array_equal(self.entries, other.entries))

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(x) for x in row) + "]"
                               for row in self.rows()) + "]"


def mat_power(a: Matrix, k: int) -> Matrix:
    """
    A^k by square-and-multiply

    :raises ValueError: k < 1
    """
    if k < 1:
        raise ValueError(f"exponent must be >= 1, got {k}")
    return Matrix(a.owner, batch.mat_pow(a.entries[None], k, a.owner)[0])


def _hessenberg(a: Matrix) -> list[list[FieldElem]]:
    h = a.rows()
    n = a.n
    for j in range(n - 2):
        pivot = next((i for i in range(j + 1, n) if not h[i][j].is_zero()), None)
        if pivot is None:
            continue
        if pivot != j + 1:
            h[pivot], h[j + 1] = h[j + 1], h[pivot]
            for row in h:
                row[pivot], row[j + 1] = row[j + 1], row[pivot]
        inv = h[j + 1][j].inverse()
        for i in range(j + 2, n):
            u = h[i][j] * inv
            if u.is_zero():
                continue
            h[i] = [x - u * y for x, y in zip(h[i], h[j + 1])]
            for row in h:
                row[j + 1] = row[j + 1] + u * row[i]
    return h


def char_poly(a: Matrix) -> Poly:
    """
    Characteristic polynomial det(tI - A), via a Hessenberg form
    """
    field, n = a.owner, a.n
    h = _hessenberg(a)
    t = Poly.t(field)
    chain = [Poly.one(field)]
    for m in range(1, n + 1):
        pm = (t - h[m - 1][m - 1]) * chain[m - 1]
        prod = field.one
        for i in range(1, m):
            prod = prod * h[m - i][m - i - 1]
            pm = pm - chain[m - i - 1].scale(prod * h[m - i - 1][m - 1])
        chain.append(pm)
    return chain[n]


def min_poly(a: Matrix) -> Poly:
    """
    Minimal polynomial from the first linear dependency among vec(I), vec(A), vec(A^2), ...
    """
    field, n = a.owner, a.n
    basis: list[tuple[int, list[FieldElem], Poly]] = []
    power = Matrix.identity(field, n)
    for i in range(n * n + 1):
        vec = [x for row in power.rows() for x in row]
        combo = Poly.monomial(field, i)
        for pivot, row, row_combo in basis:
            c = vec[pivot]
            if not c.is_zero():
                vec = [x - c * y for x, y in zip(vec, row)]
                combo = combo - row_combo.scale(c)
        lead = next((k for k, x in enumerate(vec) if not x.is_zero()), None)
        if lead is None:
            return combo
        inv = vec[lead].inverse()
        basis.append((lead, [x * inv for x in vec], combo.scale(inv)))
        power = power @ a
    raise AssertionError("no dependency found among n^2 + 1 powers")
