"""
Dense univariate polynomials over a FieldSpec.

Coefficients are stored constant term first with the zero polynomial as the empty tuple.
Monic polynomials of degree n are indexed by their non-leading coefficients read as base-q
digits (constant term least significant); enumeration follows that index, which is the
lexicographic order comparing the constant term last.
"""

from __future__ import annotations

from typing import Callable, Iterator, Sequence

from sympy import divisors, factorint, mobius
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p, gf_pow_mod

from src.algebra.field import FieldElem, FieldSpec, IntLike, conj_q, elem_pow
from src.constants import POLY_ENUMERATION_GUARD
from src.errors import HypothesisError, check_guard


class Poly:
    """
    Polynomial over a finite field
    """

    # ------------------------------
    # Class fields
    # ------------------------------

    owner: FieldSpec
    coeffs: tuple[FieldElem, ...]

    # ------------------------------
    # Class creation
    # ------------------------------

    def __init__(self, owner: FieldSpec, coeffs: Sequence[IntLike]) -> None:
        """
        :param owner: Coefficient field
        :param coeffs: Coefficients, constant term first; ints are mapped into the prime subfield
        """
        elems = [owner.coerce(c) for c in coeffs]
        while elems and elems[-1].is_zero():
            elems.pop()
        self.owner = owner
        self.coeffs = tuple(elems)

    @classmethod
    def zero(cls, field: FieldSpec) -> Poly:
        return cls(field, ())

    @classmethod
    def one(cls, field: FieldSpec) -> Poly:
        return cls(field, (field.one,))

    @classmethod
    def monomial(cls, field: FieldSpec, k: int, c: IntLike = 1) -> Poly:
        return cls(field, [field.zero] * k + [field.coerce(c)])

    @classmethod
    def t(cls, field: FieldSpec) -> Poly:
        return cls.monomial(field, 1)

    @classmethod
    def from_index(cls, field: FieldSpec, n: int, index: int) -> Poly:
        """
        Monic degree-n polynomial with the given enumeration index in [0, q^n)
        """
        low = []
        for _ in range(n):
            index, digit = divmod(index, field.q)
            low.append(field.element(digit))
        return cls(field, low + [field.one])

    # ------------------------------
    # Class interaction
    # ------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> FieldElem:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def constant(self) -> FieldElem:
        return self.coeffs[0] if self.coeffs else self.owner.zero

    @property
    def index(self) -> int:
        """
        Enumeration index of a monic polynomial
        """
        value = 0
        for c in reversed(self.coeffs[:-1]):
            value = value * self.owner.q + c.index
        return value

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.leading.is_one()

    def is_one(self) -> bool:
        return self.degree == 0 and self.coeffs[0].is_one()

    def coeff(self, i: int) -> FieldElem:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.owner.zero

    def monic(self) -> Poly:
        if self.is_zero():
            return self
        return self.scale(self.leading.inverse())

    def scale(self, c: IntLike) -> Poly:
        c = self.owner.coerce(c)
        return Poly(self.owner, [a * c for a in self.coeffs])

    def map_coeffs(self, func: Callable[[FieldElem], FieldElem]) -> Poly:
        return Poly(self.owner, [func(a) for a in self.coeffs])

    def shift(self, k: int) -> Poly:
        """
        Multiplication by t^k
        """
        if self.is_zero():
            return self
        return Poly(self.owner, [self.owner.zero] * k + list(self.coeffs))

    def evaluate(self, x: IntLike) -> FieldElem:
        x = self.owner.coerce(x)
        acc = self.owner.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> Poly:
        return Poly(self.owner, [c * i for i, c in enumerate(self.coeffs)][1:])

    def _coerce_poly(self, other: Poly | IntLike) -> Poly:
        if isinstance(other, Poly):
            if other.owner != self.owner:
                raise ValueError("polynomials over different fields")
            return other
        return Poly(self.owner, (other,))

    def __add__(self, other: Poly | IntLike) -> Poly:
        other = self._coerce_poly(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.owner, [self.coeff(i) + other.coeff(i) for i in range(size)])

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(self.owner, [-c for c in self.coeffs])

    def __sub__(self, other: Poly | IntLike) -> Poly:
        return self + (-self._coerce_poly(other))

    def __mul__(self, other: Poly | IntLike) -> Poly:
        other = self._coerce_poly(other)
        if self.is_zero() or other.is_zero():
            return Poly.zero(self.owner)
        out = [self.owner.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(self.owner, out)

    __rmul__ = __mul__

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        other = self._coerce_poly(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        inv_lead = other.leading.inverse()
        quot = [self.owner.zero] * max(0, len(rem) - dq)
        for top in range(len(rem) - 1, dq - 1, -1):
            c = rem[top] * inv_lead
            if c.is_zero():
                continue
            quot[top - dq] = c
            for i, b in enumerate(other.coeffs):
                rem[top - dq + i] = rem[top - dq + i] - c * b
        return Poly(self.owner, quot), Poly(self.owner, rem[:dq])

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def pow_mod(self, k: int, modulus: Poly) -> Poly:
        """
        self^k mod modulus by square-and-multiply
        """
        if k < 0:
            raise ValueError(f"negative exponent {k}")
        result = Poly.one(self.owner) % modulus
        base = self % modulus
        while k:
            if k & 1:
                result = (result * base) % modulus
            k >>= 1
            if k:
                base = (base * base) % modulus
        return result

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Poly) and self.owner == other.owner
                and self.coeffs == other.coeffs)

    def __hash__(self) -> int:
        return hash((self.owner, self.coeffs))

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c.is_zero():
                continue
            coef = "" if (c.is_one() and i > 0) else f"({c})" if self.owner.d > 1 else str(c)
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            terms.append(f"{coef}{mono}")
        return " + ".join(terms)

    def as_int_list(self) -> list[int]:
        """
        Highest-first integer coefficients for sympy.polys.galoistools (prime fields only)
        """
        return [c.coeffs[0] for c in reversed(self.coeffs)]


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """
    Monic greatest common divisor (zero if both inputs are zero)
    """
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def t_power_mod(f: Poly, e: int) -> Poly:
    """
    t^e mod f
    """
    return Poly.t(f.owner).pow_mod(e, f)


def _frobenius_mod(h: Poly, f: Poly) -> Poly:
    return h.pow_mod(f.owner.q, f)


def _require_monic(f: Poly, what: str) -> None:
    if not f.is_monic() or f.degree < 1:
        raise ValueError(f"{what} needs a monic polynomial of degree >= 1, got {f}")


def is_irreducible(f: Poly) -> bool:
    """
    Rabin's test: t^(q^n) = t mod f and gcd(t^(q^(n/r)) - t, f) = 1 for each prime r | n.

    :raises ValueError: f not monic or constant
    """
    _require_monic(f, "is_irreducible")
    field, n = f.owner, f.degree
    if n == 1:
        return True
    if field.d == 1:
        return bool(gf_irreducible_p(ZZ.map(f.as_int_list()), field.p, ZZ))

    t = Poly.t(field)
    frob = [t % f]
    for _ in range(n):
        frob.append(_frobenius_mod(frob[-1], f))
    if frob[n] != t % f:
        return False
    return all(poly_gcd(frob[n // r] - t, f).is_one() for r in factorint(n))


def enumerate_monic(field: FieldSpec, n: int, start: int = 0,
                    stop: int | None = None) -> Iterator[Poly]:
    """
    Monic degree-n polynomials with index in [start, stop), in index order
    """
    stop = field.q ** n if stop is None else stop
    for index in range(start, stop):
        yield Poly.from_index(field, n, index)


def enumerate_monic_irreducibles(field: FieldSpec, n: int,
                                 guard: int = POLY_ENUMERATION_GUARD) -> Iterator[Poly]:
    """
    Every monic irreducible of degree n exactly once, in lexicographic order

    :raises GuardExceededError: q^n above guard
    """
    if n < 1:
        raise ValueError(f"degree must be >= 1, got {n}")
    check_guard(f"monic degree-{n} polynomials over F_{field.q}", field.q ** n, guard)
    for f in enumerate_monic(field, n):
        if n > 1 and f.constant.is_zero():
            continue
        if is_irreducible(f):
            yield f


def necklace_count(q: int, n: int) -> int:
    """
    Number of monic irreducibles of degree n over F_q: (1/n) sum_{i | n} mu(n/i) q^i
    """
    return sum(int(mobius(n // i)) * q ** i for i in divisors(n)) // n


def reciprocal_transform(f: Poly) -> Poly:
    """
    f~(t) = f(0)^-1 t^deg f f(1/t)

    :raises ValueError: f(0) = 0
    """
    if f.constant.is_zero():
        raise ValueError("reciprocal transform needs f(0) != 0")
    inv = f.constant.inverse()
    return Poly(f.owner, [c * inv for c in reversed(f.coeffs)])


def conjugate_transform(f: Poly) -> Poly:
    """
    f-bar(t) = (f(0)^q)^-1 t^deg f sum_i a_i^q t^-i over a field tagged by make_unitary_field

    :raises ValueError: f(0) = 0
    :raises HypothesisError: field has no base subfield tag
    """
    if f.constant.is_zero():
        raise ValueError("conjugate transform needs f(0) != 0")
    bars = [conj_q(c) for c in f.coeffs]
    inv = bars[0].inverse()
    return Poly(f.owner, [c * inv for c in reversed(bars)])


def is_self_reciprocal(f: Poly) -> bool:
    return not f.constant.is_zero() and reciprocal_transform(f) == f


def is_self_conjugate(f: Poly) -> bool:
    return not f.constant.is_zero() and conjugate_transform(f) == f


def roots_satisfy_power(f: Poly, e: int, check: bool = True) -> bool:
    """
    True iff every root of the irreducible f satisfies alpha^e = 1, decided by t^e = 1 mod f

    :param f: Monic irreducible, f != t
    :param e: Exponent
    :param check: Verify irreducibility first
    :raises ValueError: f reducible or f = t
    """
    _require_monic(f, "roots_satisfy_power")
    if f.degree == 1 and f.constant.is_zero():
        raise ValueError("roots_satisfy_power is undefined for f = t")
    if check and not is_irreducible(f):
        raise ValueError(f"roots_satisfy_power needs an irreducible polynomial, got {f}")
    if f.owner.d == 1:
        return gf_pow_mod(ZZ.map([1, 0]), e, ZZ.map(f.as_int_list()), f.owner.p, ZZ) == [1]
    return t_power_mod(f, e).is_one()


def _pth_root(f: Poly) -> Poly:
    """
    g with g^p = f, for f whose exponents are all multiples of p
    """
    field = f.owner
    root_exp = field.q // field.p
    return Poly(field, [elem_pow(f.coeffs[i], root_exp) for i in range(0, len(f.coeffs), field.p)])


def squarefree_factorization(f: Poly) -> list[tuple[Poly, int]]:
    """
    Square-free decomposition of a monic f as [(g_i, i)] with f = prod g_i^i, g_i square-free
    and pairwise coprime; trivial factors are omitted.
    """
    _require_monic(f, "squarefree_factorization")
    out: dict[int, Poly] = {}

    def collect(g: Poly, mult: int) -> None:
        if g.degree >= 1:
            out[mult] = out[mult] * g if mult in out else g

    def run(poly: Poly, scale: int) -> None:
        if poly.degree < 1:
            return
        c = poly_gcd(poly, poly.derivative())
        w = poly // c
        i = 1
        while not w.is_one():
            y = poly_gcd(w, c)
            collect(w // y, i * scale)
            w, c, i = y, c // y, i + 1
        if not c.is_one():
            run(_pth_root(c), scale * f.owner.p)

    run(f, 1)
    return [(g, m) for m, g in sorted(out.items())]


def distinct_degree_factorization(f: Poly) -> list[tuple[Poly, int]]:
    """
    For square-free monic f, [(G_m, m)] where G_m is the product of the degree-m irreducible
    factors of f
    """
    _require_monic(f, "distinct_degree_factorization")
    field = f.owner
    t = Poly.t(field)
    out = []
    rest = f
    h = t % rest
    m = 1
    while rest.degree >= 2 * m:
        h = _frobenius_mod(h, rest)
        g = poly_gcd(rest, h - t)
        if not g.is_one():
            out.append((g, m))
            rest = rest // g
            h = h % rest
        m += 1
    if rest.degree >= 1:
        out.append((rest, rest.degree))
    return out


def irreducible_factor_degrees(f: Poly) -> list[tuple[int, int]]:
    """
    (degree, multiplicity) pairs of the irreducible factors of monic f, with repetition
    """
    degrees = []
    for part, mult in squarefree_factorization(f):
        for group, m in distinct_degree_factorization(part):
            degrees.extend([(m, mult)] * (group.degree // m))
    return sorted(degrees)
