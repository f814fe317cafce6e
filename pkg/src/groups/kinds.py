"""
Matrix algebra and classical group descriptors, their orders and membership tests.

The symplectic form is J = [[0, I], [-I, 0]] and the Hermitian form is the identity, so
Sp_{2m}(q) = {A : A^T J A = J} and U_n(q) = {A in M_n(q^2) : A* A = I}.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

import numpy as np

from src.algebra import batch
from src.algebra.field import FieldSpec, field_for_order, make_unitary_field, prime_power
from src.algebra.matrix import Matrix
from src.constants import GroupFamily
from src.errors import HypothesisError


@dataclass(frozen=True)
class GroupKind:
    """
    One of M_n(q), GL_n(q), Sp_n(q) (n even) or U_n(q)

    Attributes
    ----------
    family: :class:`GroupFamily`
        Family of the group.
    n: :class:`int`
        Matrix dimension.
    q: :class:`int`
        Order of the defining field F_q (U_n(q) has entries in F_{q^2}).
    """
    family: GroupFamily
    n: int
    q: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise HypothesisError(f"dimension must be >= 1, got n={self.n}")
        if self.family == GroupFamily.SP and self.n % 2:
            raise HypothesisError(f"symplectic groups need even dimension, got n={self.n}")
        prime_power(self.q)

    @property
    def field(self) -> FieldSpec:
        """
        Entry field: F_{q^2} tagged over F_q for U, F_q otherwise
        """
        if self.family == GroupFamily.U:
            return make_unitary_field(self.q)
        return field_for_order(self.q)

    @property
    def space_size(self) -> int:
        """
        Number of matrices scanned by filter enumeration
        """
        return self.field.q ** (self.n * self.n)

    def label(self) -> str:
        names = {GroupFamily.M: "M", GroupFamily.GL: "GL", GroupFamily.SP: "Sp",
                 GroupFamily.U: "U"}
        return f"{names[self.family]}_{self.n}({self.q})"

    def as_task(self) -> tuple[str, int, int]:
        return self.family.value, self.n, self.q

    @classmethod
    def from_task(cls, task: tuple[str, int, int]) -> GroupKind:
        family, n, q = task
        return cls(GroupFamily(family), n, q)


def gl_order(n: int, q: int) -> int:
    """
    |GL_n(q)| = prod_{i<n} (q^n - q^i); |GL_0(q)| = 1
    """
    return prod(q ** n - q ** i for i in range(n))


def sp_order(n: int, q: int) -> int:
    """
    |Sp_n(q)| for even n = 2m: q^(m^2) prod_{i=1}^m (q^(2i) - 1)
    """
    m = n // 2
    return q ** (m * m) * prod(q ** (2 * i) - 1 for i in range(1, m + 1))


def u_order(n: int, q: int) -> int:
    """
    |U_n(q)| = q^(n(n-1)/2) prod_{i=1}^n (q^i - (-1)^i)
    """
    return q ** (n * (n - 1) // 2) * prod(q ** i - (-1) ** i for i in range(1, n + 1))


def orthogonal_order(dim: int, q: int, epsilon: int = 1) -> int:
    """
    Order of the orthogonal group of a nondegenerate quadratic form.

    Even dimension 2mu: 2 q^(mu^2 - mu) (q^mu - epsilon) prod_{j=1}^{mu-1} (q^(2j) - 1),
    epsilon = +1 (split) or -1 (non-split). Odd dimension 2mu + 1 (q odd):
    2 q^(mu^2) prod_{j=1}^{mu} (q^(2j) - 1).

    :raises HypothesisError: epsilon not +-1, or odd dimension with even q
    """
    if dim % 2 == 0:
        if epsilon not in (1, -1):
            raise HypothesisError(f"epsilon must be +1 or -1, got {epsilon}")
        mu = dim // 2
        return 2 * q ** (mu * mu - mu) * (q ** mu - epsilon) \
            * prod(q ** (2 * j) - 1 for j in range(1, mu))
    if q % 2 == 0:
        raise HypothesisError("odd-dimensional orthogonal groups need odd q")
    mu = dim // 2
    return 2 * q ** (mu * mu) * prod(q ** (2 * j) - 1 for j in range(1, mu + 1))


def group_order(kind: GroupKind) -> int:
    """
    Exact order of the group (or of the algebra M_n(q))
    """
    if kind.family == GroupFamily.M:
        return kind.q ** (kind.n * kind.n)
    if kind.family == GroupFamily.GL:
        return gl_order(kind.n, kind.q)
    if kind.family == GroupFamily.SP:
        return sp_order(kind.n, kind.q)
    return u_order(kind.n, kind.q)


def symplectic_form(field: FieldSpec, n: int) -> Matrix:
    """
    J = [[0, I], [-I, 0]] in dimension n
    """
    m = n // 2
    rows = [[0] * n for _ in range(n)]
    for i in range(m):
        rows[i][m + i] = 1
        rows[m + i][i] = -1
    return Matrix.from_rows(field, rows)


def member_mask(kind: GroupKind, mats: np.ndarray) -> np.ndarray:
    """
    Membership verdicts for a stack of matrices of shape (N, n, n, d)
    """
    field = kind.field
    count = mats.shape[0]
    if kind.family == GroupFamily.M:
        return np.ones(count, dtype=bool)
    if kind.family == GroupFamily.GL:
        return ~batch.is_zero(batch.mat_det(mats, field))
    if kind.family == GroupFamily.SP:
        form = np.broadcast_to(symplectic_form(field, kind.n).entries, mats.shape)
        lhs = batch.mat_mul(batch.mat_mul(np.swapaxes(mats, 1, 2), form, field), mats, field)
        return (lhs == form).all(axis=(1, 2, 3))
    lhs = batch.mat_mul(batch.mat_conj_transpose(mats, field), mats, field)
    return (lhs == batch.mat_identity(count, kind.n, field)).all(axis=(1, 2, 3))


def is_member(kind: GroupKind, a: Matrix) -> bool:
    """
    :raises ValueError: dimension or field mismatch
    """
    if a.n != kind.n or a.owner != kind.field:
        raise ValueError(f"{a.n}x{a.n} matrix over {a.owner} does not match {kind.label()}")
    return bool(member_mask(kind, a.entries[None])[0])
