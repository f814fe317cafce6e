"""
Finite fields F_{p^d} with a deterministic modulus, and their elements.

Elements are dense residue vectors (constant coefficient first) in F_p[t] / (modulus).
The integer index of an element reads that vector as base-p digits, constant digit least
significant; enumeration order, the modulus choice and FieldSpec.element all use it.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Union

import numpy as np
from sympy import factorint, isprime, perfect_power
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p

from src.constants import FIELD_MAX_ORDER
from src.errors import HypothesisError

IntLike = Union[int, "FieldElem"]


def _digits(index: int, p: int, d: int) -> tuple[int, ...]:
    out = []
    for _ in range(d):
        index, r = divmod(index, p)
        out.append(r)
    return tuple(out)


def _poly_mod(coeffs: list[int], modulus: tuple[int, ...], p: int) -> list[int]:
    """
    Reduces a low-first coefficient list modulo a monic low-first modulus
    """
    d = len(modulus) - 1
    coeffs = list(coeffs)
    for top in range(len(coeffs) - 1, d - 1, -1):
        c = coeffs[top] % p
        if c:
            shift = top - d
            for i in range(d):
                coeffs[shift + i] = (coeffs[shift + i] - c * modulus[i]) % p
        coeffs[top] = 0
    return [c % p for c in coeffs[:d]] + [0] * max(0, d - len(coeffs))


class FieldSpec:
    """
    Finite field F_q, q = p^d, realised as F_p[t] / (modulus).

    base_degree is set only for fields built by make_unitary_field: it marks the field as the
    quadratic extension of F_{p^base_degree}, the subfield fixed by conj_q.
    """

    # ------------------------------
    # Class fields
    # ------------------------------

    p: int
    d: int
    modulus: tuple[int, ...]
    q: int
    base_degree: int | None
    mul_tensor: np.ndarray

    # ------------------------------
    # Class creation
    # ------------------------------

    def __init__(self, p: int, d: int, modulus: tuple[int, ...],
                 base_degree: int | None = None) -> None:
        """
        :param p: Prime characteristic
        :param d: Extension degree
        :param modulus: Monic irreducible of degree d, constant term first; (0, 1) when d = 1
        :param base_degree: Degree of the conjugation-fixed subfield over F_p, or None
        """
        self.p = p
        self.d = d
        self.modulus = tuple(modulus)
        self.q = p ** d
        self.base_degree = base_degree
        self.mul_tensor = self._build_mul_tensor()
        self.zero = FieldElem(self, (0,) * d)
        self.one = FieldElem(self, (1,) + (0,) * (d - 1))

    def _build_mul_tensor(self) -> np.ndarray:
        """
        T[a, b] is the residue vector of t^(a+b); multiplying residue vectors x, y gives
        sum_{a,b} x_a y_b T[a, b].
        """
        d = self.d
        tensor = np.zeros((d, d, d), dtype=np.int64)
        for a in range(d):
            for b in range(d):
                mono = [0] * (a + b + 1)
                mono[a + b] = 1
                tensor[a, b] = _poly_mod(mono, self.modulus, self.p) if d > 1 else [1]
        return tensor

    # ------------------------------
    # Class interaction
    # ------------------------------

    def element(self, index: int) -> FieldElem:
        """
        Element with the given integer index in [0, q)
        """
        if not 0 <= index < self.q:
            raise ValueError(f"index {index} outside [0, {self.q})")
        return FieldElem(self, _digits(index, self.p, self.d))

    def scalar(self, k: int) -> FieldElem:
        """
        Image of the integer k in the prime subfield
        """
        return FieldElem(self, (k % self.p,) + (0,) * (self.d - 1))

    def gen(self) -> FieldElem:
        """
        The class of t (a primitive element is not guaranteed)
        """
        if self.d == 1:
            raise ValueError("prime field has no adjoined generator")
        return FieldElem(self, (0, 1) + (0,) * (self.d - 2))

    def coerce(self, value: IntLike) -> FieldElem:
        if isinstance(value, FieldElem):
            if value.owner != self:
                raise ValueError("element belongs to a different field")
            return value
        return self.scalar(int(value))

    def elements(self) -> Iterator[FieldElem]:
        """
        All elements in index order
        """
        for index in range(self.q):
            yield self.element(index)

    def nonzero_elements(self) -> Iterator[FieldElem]:
        for index in range(1, self.q):
            yield self.element(index)

    def in_base_subfield(self, x: FieldElem) -> bool:
        """
        True iff x lies in the subfield fixed by conj_q
        """
        return conj_q(x) == x

    def frobenius_matrix(self, k: int) -> np.ndarray:
        """
        F_p-linear matrix of x -> x^(p^k) acting on residue vectors (column convention)
        """
        columns = []
        for j in range(self.d):
            basis = FieldElem(self, tuple(int(i == j) for i in range(self.d)))
            columns.append(elem_pow(basis, self.p ** k).coeffs)
        return np.array(columns, dtype=np.int64).T

    def to_array(self, elems: list[FieldElem]) -> np.ndarray:
        return np.array([e.coeffs for e in elems], dtype=np.int64).reshape(-1, self.d)

    def from_array(self, residues: np.ndarray) -> FieldElem:
        return FieldElem(self, tuple(int(c) for c in residues))

    def _key(self) -> tuple:
        return self.p, self.d, self.modulus, self.base_degree

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldSpec) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        tag = f" over F_{self.p ** self.base_degree}" if self.base_degree else ""
        return f"F_{self.q}{tag} mod {self.modulus}"


class FieldElem:
    """
    Element of a FieldSpec stored as a residue vector of length d
    """

    __slots__ = ("owner", "coeffs")

    owner: FieldSpec
    coeffs: tuple[int, ...]

    def __init__(self, owner: FieldSpec, coeffs: tuple[int, ...]) -> None:
        self.owner = owner
        self.coeffs = coeffs

    @property
    def index(self) -> int:
        value = 0
        for c in reversed(self.coeffs):
            value = value * self.owner.p + c
        return value

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    def __add__(self, other: IntLike) -> FieldElem:
        other = self.owner.coerce(other)
        p = self.owner.p
        return FieldElem(self.owner, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> FieldElem:
        p = self.owner.p
        return FieldElem(self.owner, tuple((-a) % p for a in self.coeffs))

    def __sub__(self, other: IntLike) -> FieldElem:
        return self + (-self.owner.coerce(other))

    def __rsub__(self, other: IntLike) -> FieldElem:
        return self.owner.coerce(other) - self

    def __mul__(self, other: IntLike) -> FieldElem:
        other = self.owner.coerce(other)
        field = self.owner
        p, d = field.p, field.d
        if d == 1:
            return FieldElem(field, ((self.coeffs[0] * other.coeffs[0]) % p,))
        prod = [0] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] += a * b
        return FieldElem(field, tuple(_poly_mod(prod, field.modulus, p)))

    __rmul__ = __mul__

    def inverse(self) -> FieldElem:
        if self.is_zero():
            raise ZeroDivisionError("zero has no inverse")
        return elem_pow(self, self.owner.q - 2)

    def __truediv__(self, other: IntLike) -> FieldElem:
        return self * self.owner.coerce(other).inverse()

    def __pow__(self, k: int) -> FieldElem:
        return elem_pow(self, k)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = self.owner.scalar(other)
        return (isinstance(other, FieldElem) and self.owner == other.owner
                and self.coeffs == other.coeffs)

    def __hash__(self) -> int:
        return hash((self.owner.q, self.coeffs))

    def __int__(self) -> int:
        return self.index

    def __repr__(self) -> str:
        if self.owner.d == 1:
            return str(self.coeffs[0])
        terms = [f"{c}t^{i}" if i > 1 else (f"{c}t" if i == 1 else str(c))
                 for i, c in enumerate(self.coeffs) if c]
        return " + ".join(reversed(terms)) or "0"


@lru_cache(maxsize=None)
def make_field(p: int, d: int = 1) -> FieldSpec:
    """
    Builds F_{p^d} whose modulus is the least monic irreducible of degree d over F_p, the
    non-leading coefficients read as base-p digits with the constant term least significant.
    Repeated calls return the same object.

    :param p: Prime characteristic
    :param d: Extension degree, d >= 1
    :raises HypothesisError: p not prime, d < 1, or p^d above FIELD_MAX_ORDER
    """
    if not isprime(p):
        raise HypothesisError(f"field characteristic must be prime, got p={p}")
    if d < 1:
        raise HypothesisError(f"extension degree must be >= 1, got d={d}")
    if p ** d > FIELD_MAX_ORDER:
        raise HypothesisError(f"field order {p}^{d} exceeds {FIELD_MAX_ORDER}")
    return FieldSpec(p, d, _least_irreducible(p, d))


@lru_cache(maxsize=None)
def make_unitary_field(q: int) -> FieldSpec:
    """
    Builds F_{q^2} tagged as the quadratic extension of F_q (required by conj_q and the
    unitary group). Its modulus coincides with make_field(p, 2e) for q = p^e.

    :raises HypothesisError: q not a prime power
    """
    p, e = prime_power(q)
    if p ** (2 * e) > FIELD_MAX_ORDER:
        raise HypothesisError(f"field order {q}^2 exceeds {FIELD_MAX_ORDER}")
    return FieldSpec(p, 2 * e, _least_irreducible(p, 2 * e), base_degree=e)


def field_for_order(q: int) -> FieldSpec:
    """
    make_field for a prime power q
    """
    p, e = prime_power(q)
    return make_field(p, e)


def prime_power(q: int) -> tuple[int, int]:
    """
    Splits q = p^e

    :raises HypothesisError: q is not a prime power
    """
    if q >= 2 and isprime(q):
        return q, 1
    split = perfect_power(q) if q > 3 else False
    if split:
        base, e = split
        factors = factorint(base)
        if len(factors) == 1:
            (p, k), = factors.items()
            return p, k * e
    raise HypothesisError(f"q must be a prime power, got q={q}")


def _least_irreducible(p: int, d: int) -> tuple[int, ...]:
    if d == 1:
        return 0, 1
    for index in range(p ** d):
        low = _digits(index, p, d)
        if gf_irreducible_p(ZZ.map([1] + list(reversed(low))), p, ZZ):
            return low + (1,)
    raise AssertionError(f"no irreducible of degree {d} over F_{p}")


def elem_pow(x: FieldElem, k: int) -> FieldElem:
    """
    Square-and-multiply power. 0^0 is defined as 1.

    :raises ValueError: k < 0
    """
    if k < 0:
        raise ValueError(f"negative exponent {k}")
    result = x.owner.one
    base = x
    while k:
        if k & 1:
            result = result * base
        k >>= 1
        if k:
            base = base * base
    return result


def mult_order(x: FieldElem) -> int:
    """
    Least k >= 1 with x^k = 1, found by stripping prime factors from q - 1

    :raises ValueError: x = 0
    """
    if x.is_zero():
        raise ValueError("zero has no multiplicative order")
    order = x.owner.q - 1
    for r in factorint(order):
        while order % r == 0 and elem_pow(x, order // r).is_one():
            order //= r
    return order


def conj_q(x: FieldElem) -> FieldElem:
    """
    The involution x -> x^q of F_{q^2} over its tagged base field F_q

    :raises HypothesisError: field not built by make_unitary_field
    """
    field = x.owner
    if field.base_degree is None:
        raise HypothesisError("conj_q needs a field tagged with its base subfield "
                              "(use make_unitary_field)")
    return elem_pow(x, field.p ** field.base_degree)
