"""
Closed forms for the number of monic irreducibles whose roots satisfy alpha^e = 1:
plain (degree n over F_q), self-reciprocal (degree 2n over F_q) and self-conjugate
(degree n over F_{q^2}).

The primary functions return the corrected integer counts; the *_verbatim functions evaluate
the displays as originally printed and return exact rationals for the discrepancy reports.
"""

from fractions import Fraction

from sympy import divisors, mobius

from src.constants import CountKind
from src.counting.valuation import CountParams, e_value, h_value
from src.errors import VerificationMismatch


def _exact(total: int, denominator: int, what: str) -> int:
    value, rem = divmod(total, denominator)
    if rem:
        raise VerificationMismatch(f"{what} is not an integer", "integer",
                                   Fraction(total, denominator))
    return value


def _is_power_of_two(n: int) -> bool:
    return n & (n - 1) == 0


def d_plain(q: int, L: int, n: int, strict: bool = True) -> int:
    """
    (1/n) sum_{i | n} mu(n/i) e_i: monic irreducibles of degree n over F_q whose roots
    satisfy alpha^(e_n) = 1.

    :param strict: Enforce delta_L(p) | d
    :raises HypothesisError: violated hypotheses
    """
    params = CountParams(q, L, n)
    if strict:
        params.require_delta_divides_d()
    total = sum(int(mobius(n // i)) * e_value(q, L, i) for i in divisors(n))
    return _exact(total, n, f"d_plain({q}, {L}, {n})")


def _check_self_reciprocal(q: int, L: int, n: int) -> CountParams:
    return CountParams(q, L, n).require_l_divides_q_minus_1().require_odd_q()


def d_self_reciprocal(q: int, L: int, n: int) -> int:
    """
    Self-reciprocal monic irreducibles of degree 2n over F_q with roots satisfying
    alpha^(e_2n) = 1:

        (1/2n) [ sum_{i | n, i odd} mu(i) h_{n/i} - c [n is a power of 2] ]

    where h_m is the L-free part of q^m + 1 and c = #({1, -1} meet mu_h) removes the roots
    +-1, which have degree 1. c = 2 for odd L, c = 1 for L = 2.

    :raises HypothesisError: L does not divide q - 1, or q even
    """
    _check_self_reciprocal(q, L, n)
    total = sum(int(mobius(i)) * h_value(q, L, n // i) for i in divisors(n) if i % 2)
    if _is_power_of_two(n):
        total -= 1 + (h_value(q, L, n) % 2 == 0)
    return _exact(total, 2 * n, f"d_self_reciprocal({q}, {L}, {n})")


def d_self_reciprocal_verbatim(q: int, L: int, n: int) -> Fraction:
    """
    The printed display (1/2n) sum_{i | n, i odd} mu(i) h_{n/i}, without the +-1 correction
    """
    _check_self_reciprocal(q, L, n)
    total = sum(int(mobius(i)) * h_value(q, L, n // i) for i in divisors(n) if i % 2)
    return Fraction(total, 2 * n)


def _check_self_conjugate(q: int, L: int, n: int) -> CountParams:
    return CountParams(q, L, n).require_odd_l().require_l_divides_q_minus_1()


def d_self_conjugate(q: int, L: int, n: int) -> int:
    """
    Self-conjugate monic irreducibles of degree n over F_{q^2} with roots satisfying
    alpha^e = 1, e the L-free part of q^(2n) - 1. Zero for even n, since the roots of a
    self-conjugate irreducible lie in the cyclic group of order q^n + 1 and generate F_{q^(2n)}
    over F_{q^2} only for odd n.

    :raises HypothesisError: L even or L does not divide q - 1
    """
    _check_self_conjugate(q, L, n)
    if n % 2 == 0:
        return 0
    total = sum(int(mobius(i)) * h_value(q, L, n // i) for i in divisors(n))
    return _exact(total, n, f"d_self_conjugate({q}, {L}, {n})")


def d_self_conjugate_verbatim(q: int, L: int, n: int) -> Fraction:
    """
    The printed display (1/n) sum_{i | n} mu(i) h_{n/i}, for every n
    """
    _check_self_conjugate(q, L, n)
    total = sum(int(mobius(i)) * h_value(q, L, n // i) for i in divisors(n))
    return Fraction(total, n)


def e_for_kind(kind: CountKind, q: int, L: int, n: int) -> int:
    """
    Exponent used in the root condition of each polynomial family
    """
    if kind == CountKind.PLAIN:
        return e_value(q, L, n)
    if kind == CountKind.SELF_RECIPROCAL:
        return e_value(q, L, 2 * n)
    return e_value(q * q, L, n)
