"""
L-adic valuations, the lifting-the-exponent identity and the L-free parts e_l, h_l that drive
every counting formula. CountParams validates the (q, L, n) hypotheses once, up front.
"""

from math import gcd

from sympy import isprime, multiplicity, n_order

from src.algebra.field import prime_power
from src.errors import HypothesisError


def v_adic(L: int, n: int) -> int:
    """
    Largest k with L^k | n

    :raises ValueError: n = 0
    """
    if n == 0:
        raise ValueError("v_adic(L, 0) is undefined")
    return int(multiplicity(L, abs(n)))


def l_free(L: int, n: int) -> int:
    """
    n with every factor L removed
    """
    return abs(n) // L ** v_adic(L, n)


def lte_val(L: int, q: int | None, k: int, c: int) -> int:
    """
    v_L(q^k - 1) = c + v_L(k) for odd L with v_L(q - 1) = c >= 1, computed symbolically.

    :param L: Odd prime
    :param q: Concrete prime power, or None for purely symbolic use
    :param k: Exponent, k >= 1
    :param c: Declared v_L(q - 1)
    :raises HypothesisError: L = 2, c < 1, or q given with v_L(q - 1) != c
    """
    if L == 2:
        raise HypothesisError("lifting the exponent in this form needs an odd prime L")
    if c < 1:
        raise HypothesisError(f"lifting the exponent needs L | q - 1 (c >= 1), got c={c}")
    if q is not None and v_adic(L, q - 1) != c:
        raise HypothesisError(f"declared c={c} but v_{L}({q} - 1) = {v_adic(L, q - 1)}")
    return c + v_adic(L, k)


def e_value(q: int, L: int, ell: int) -> int:
    """
    The L-free part of q^ell - 1

    :raises HypothesisError: gcd(L, q) != 1
    """
    if gcd(L, q) != 1:
        raise HypothesisError(f"L={L} must be coprime to q={q}")
    return l_free(L, q ** ell - 1)


def h_value(q: int, L: int, m: int) -> int:
    """
    The L-free part of q^m + 1 (orders of the self-reciprocal and self-conjugate root groups)
    """
    if gcd(L, q) != 1:
        raise HypothesisError(f"L={L} must be coprime to q={q}")
    return l_free(L, q ** m + 1)


class CountParams:
    """
    Validated (q, L, n[, c]) parameters.

    The constructor checks that q is a prime power, L is prime and gcd(L, q) = 1; the
    require_* methods check the extra hypotheses individual computations need.
    """

    # ------------------------------
    # Class fields
    # ------------------------------

    q: int
    L: int
    n: int
    c: int
    p: int
    d: int

    # ------------------------------
    # Class creation
    # ------------------------------

    def __init__(self, q: int, L: int, n: int = 1, c: int | None = None) -> None:
        """
        :param q: Field order, a prime power
        :param L: Prime exponent of the power map
        :param n: Degree / dimension parameter, n >= 1
        :param c: Declared v_L(q - 1); computed when omitted
        :raises HypothesisError: violated hypothesis, named in the message
        """
        self.p, self.d = prime_power(q)
        if not isprime(L):
            raise HypothesisError(f"L must be prime, got L={L}")
        if gcd(L, q) != 1:
            raise HypothesisError(f"gcd(L, q) must be 1, got L={L}, q={q} (L is the characteristic)")
        if n < 1:
            raise HypothesisError(f"n must be >= 1, got n={n}")
        actual = v_adic(L, q - 1)
        if c is not None and c != actual:
            raise HypothesisError(f"declared c={c} but v_{L}({q} - 1) = {actual}")
        self.q, self.L, self.n, self.c = q, L, n, actual

    # ------------------------------
    # Class interaction
    # ------------------------------

    @property
    def delta(self) -> int:
        """
        delta_L(p): multiplicative order of p modulo L
        """
        return int(n_order(self.p % self.L, self.L)) if self.L > 2 else 1

    def require_delta_divides_d(self) -> "CountParams":
        if self.d % self.delta:
            raise HypothesisError(
                f"delta_L(p) | d fails: order of p={self.p} mod L={self.L} is {self.delta}, "
                f"d={self.d}")
        return self

    def require_l_divides_q_minus_1(self) -> "CountParams":
        if self.c < 1:
            raise HypothesisError(f"L | q - 1 fails for L={self.L}, q={self.q}")
        return self

    def require_odd_l(self) -> "CountParams":
        if self.L == 2:
            raise HypothesisError("this computation needs an odd prime L (prime L != 2)")
        return self

    def require_odd_q(self) -> "CountParams":
        if self.q % 2 == 0:
            raise HypothesisError(f"this computation needs odd q, got q={self.q}")
        return self

    def as_dict(self) -> dict[str, int]:
        return {"q": self.q, "L": self.L, "n": self.n, "c": self.c}

    def __repr__(self) -> str:
        return f"CountParams(q={self.q}, L={self.L}, n={self.n}, c={self.c})"
