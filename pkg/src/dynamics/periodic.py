"""
Periodicity of the power map x -> x^L on M_n(q) and F_q.

A matrix is periodic iff its minimal polynomial is t^k g with k <= 1, g(0) != 0, and every
root of g has multiplicative order prime to L. The structural predicate checks this through
the square-free and distinct-degree factorisations of the minimal polynomial; the batched
predicate checks the equivalent power identity A^(K+1) = A on whole stacks of matrices.
"""

import math

import numpy as np

from src.algebra import batch
from src.algebra.field import FieldElem, FieldSpec, elem_pow, prime_power
from src.algebra.matrix import Matrix, min_poly
from src.algebra.poly import Poly, distinct_degree_factorization, squarefree_factorization, \
    t_power_mod
from src.console import get_logger
from src.counting.valuation import CountParams, e_value, l_free
from src.dynamics.orbit import orbit_report
from src.errors import HypothesisError

logger = get_logger(__name__)


def _strip_t(f: Poly) -> tuple[Poly, int]:
    """
    Writes f = t^k g with g(0) != 0
    """
    k = 0
    while not f.is_zero() and f.constant.is_zero():
        f = Poly(f.owner, f.coeffs[1:])
        k += 1
    return f, k


def _structural_verdict(a: Matrix, L: int) -> bool:
    q = a.owner.q
    g, zero_mult = _strip_t(min_poly(a))
    if zero_mult >= 2:
        return False
    if g.degree < 1:
        return True
    for part, _ in squarefree_factorization(g):
        for group, m in distinct_degree_factorization(part):
            if not t_power_mod(group, e_value(q, L, m)).is_one():
                return False
    return True


def is_periodic_structural(a: Matrix, L: int, strict: bool = True) -> bool:
    """
    Decides periodicity of A under X -> X^L from its minimal polynomial alone.

    :param a: Matrix over F_q
    :param L: Prime coprime to q
    :param strict: Enforce delta_L(p) | d; when False a failing hypothesis is logged and the
                   verdict is compared with orbit iteration, logging any disagreement
    :raises HypothesisError: gcd(L, q) != 1, or delta_L(p) does not divide d in strict mode
    """
    params = CountParams(a.owner.q, L)
    try:
        params.require_delta_divides_d()
    except HypothesisError as e:
        if strict:
            raise
        verdict = _structural_verdict(a, L)
        orbit = orbit_report(a, L).periodic
        logger.debug("hypothesis bypassed: %s", e)
        if orbit != verdict:
            logger.warning("structural verdict %s disagrees with orbit verdict %s for %r, L=%d",
                           verdict, orbit, a, L)
        return verdict
    return _structural_verdict(a, L)


# ------------------------------
# POWER IDENTITY
# ------------------------------

def power_identity_exponent(q: int, L: int, n: int) -> int:
    """
    K such that A in M_n(q) is periodic under X -> X^L iff A^(K+1) = A: the L-free part of
    p^s lcm(q - 1, ..., q^n - 1) with p^s >= n.
    """
    p, _ = prime_power(q)
    unipotent = 1
    while unipotent < n:
        unipotent *= p
    semisimple = math.lcm(*(q ** m - 1 for m in range(1, n + 1)))
    return l_free(L, unipotent * semisimple)


def periodic_mask(mats: np.ndarray, field: FieldSpec, L: int) -> np.ndarray:
    """
    Periodicity verdicts for a stack of matrices of shape (N, n, n, d)
    """
    n = mats.shape[1]
    k = power_identity_exponent(field.q, L, n)
    return (batch.mat_pow(mats, k + 1, field) == mats).all(axis=(1, 2, 3))


def is_periodic_power_identity(a: Matrix, L: int) -> bool:
    return bool(periodic_mask(a.entries[None], a.owner, L)[0])


# ------------------------------
# FIELD PERIODIC POINTS
# ------------------------------

def is_field_periodic(x: FieldElem, L: int) -> bool:
    """
    x is periodic under x -> x^L iff x = 0 or x^(e_1) = 1
    """
    return x.is_zero() or elem_pow(x, e_value(x.owner.q, L, 1)).is_one()


def field_periodic_points(field: FieldSpec, L: int) -> int:
    """
    Number of periodic points of x -> x^L on F_q: 1 + e_1

    :raises HypothesisError: gcd(L, q) != 1
    """
    return 1 + e_value(field.q, L, 1)


def field_periodic_set(field: FieldSpec, L: int) -> list[FieldElem]:
    return [x for x in field.elements() if is_field_periodic(x, L)]
