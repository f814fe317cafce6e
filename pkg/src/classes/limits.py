"""
Limiting proportions of periodic points as q grows with v_L(q - 1) = c fixed, evaluated
as exact rationals.

Valuations are resolved symbolically: for odd L | q - 1, v_L(q^k - 1) = c + v_L(k) and
v_L(q^k + 1) = 0.
"""

from fractions import Fraction
from math import factorial

from src.classes.partitions import Partition, partitions, split_partitions
from src.counting.valuation import lte_val
from src.errors import HypothesisError


def _check(L: int, c: int) -> None:
    if L == 2:
        raise HypothesisError("limits need an odd prime L; for L = 2 they are not determined by c")
    if c < 1:
        raise HypothesisError(f"limits need L | q - 1, i.e. c >= 1, got c={c}")


def _minus_weight(L: int, c: int, part: int, mult: int, normalized: bool) -> Fraction:
    return Fraction(1) if normalized else Fraction(1, L ** (mult * lte_val(L, None, part, c)))


def _cycle_weight(lam: Partition, scale: int) -> Fraction:
    weight = Fraction(1)
    for part, mult in lam.multiplicities().items():
        weight /= (scale * part) ** mult * factorial(mult)
    return weight


def limit_gl(ell: int, L: int, c: int, normalized: bool = False) -> Fraction:
    """
    sum_{lambda |- ell} prod_i 1 / (lambda_i^m_i m_i!) 1 / L^(m_i (c + v_L(lambda_i)))

    :param normalized: Replace every power of L by 1 (the result is then exactly 1)
    :raises HypothesisError: L = 2 or c < 1
    """
    _check(L, c)
    total = Fraction(0)
    for lam in partitions(ell):
        term = _cycle_weight(lam, 1)
        for part, mult in lam.multiplicities().items():
            term *= _minus_weight(L, c, part, mult, normalized)
        total += term
    return total


def limit_sp_u(ell: int, L: int, c: int, verbatim: bool = False,
               normalized: bool = False) -> Fraction:
    """
    Common limit for Sp_2ell(q) and U_ell(q): a sum over ordered pairs of partitions with

        prod_plus 1 / ((2 lambda)^m m!) 1 / L^(m v_L(q^lambda + 1))
        prod_minus 1 / ((2 lambda')^m' m'!) 1 / L^(m' (c + v_L(lambda')))

    The unitary case holds for ell >= 2: U_1(q) is cyclic of order q + 1, prime to L, so all
    of it is periodic.

    :param verbatim: Use lambda^m m! instead of (2 lambda)^m m!, which exceeds 1 already at
                     ell = 1 and is kept for comparison only
    :param normalized: Replace every power of L by 1
    :raises HypothesisError: L = 2 or c < 1
    """
    _check(L, c)
    scale = 1 if verbatim else 2
    total = Fraction(0)
    for pair in split_partitions(ell):
        # v_L(q^lambda + 1) = 0, so the plus partition carries no power of L
        term = _cycle_weight(pair.group_plus, scale) * _cycle_weight(pair.group_minus, scale)
        for part, mult in pair.group_minus.multiplicities().items():
            term *= _minus_weight(L, c, part, mult, normalized)
        total += term
    return total


def displayed_limit_m2(L: int, c: int) -> Fraction:
    """
    Leading coefficient of the M_2 count: (1/L^(2c) + 1/L^(v_L(q^2 - 1))) / 2
    """
    _check(L, c)
    return Fraction(1, 2) * (Fraction(1, L ** (2 * c)) + Fraction(1, L ** lte_val(L, None, 2, c)))


def displayed_limit_m3(L: int, c: int) -> Fraction:
    """
    Leading coefficient of the M_3 count:
    1/(6 L^(3c)) + 1/(3 L^(v_L(q^3 - 1))) + 1/(2 L^c L^(v_L(q^2 - 1)))
    """
    _check(L, c)
    return (Fraction(1, 6 * L ** (3 * c))
            + Fraction(1, 3 * L ** lte_val(L, None, 3, c))
            + Fraction(1, 2 * L ** (c + lte_val(L, None, 2, c))))
