"""
Exact periodic point counts of X -> X^L on M_n(q) and GL_n(q), summed over conjugacy
class types, and the closed forms of the M_2 / M_3 class tables.

A matrix is periodic iff its zero eigenvalue is semisimple and the roots of every other
irreducible factor of its characteristic polynomial have order prime to L. The Jordan
structure of nonzero eigenvalues is unrestricted (unipotent parts have p-power order).
"""

from fractions import Fraction
from math import comb, factorial, prod

from src.classes.class_type import ClassType, class_types, gl_centralizer_order
from src.console import get_logger
from src.constants import CLASS_COUNT_MAX_N, GroupFamily
from src.counting.lemmas import d_plain
from src.counting.valuation import CountParams
from src.errors import HypothesisError
from src.groups.kinds import gl_order
from src.workers import parallel_sum

logger = get_logger(__name__)


def _falling(x: int, k: int) -> int:
    return prod(range(x - k + 1, x + 1)) if k <= x else 0


def assignment_count(ct: ClassType, good: dict[int, int]) -> int:
    """
    Ways to attach pairwise distinct good irreducibles to the blocks of ct

    :param good: degree -> number of good monic irreducibles of that degree
    """
    total = 1
    for d, by_partition in ct.block_counts().items():
        ks = list(by_partition.values())
        total *= _falling(good[d], sum(ks)) // prod(factorial(k) for k in ks)
    return total


def class_size(ct: ClassType, q: int) -> int:
    """
    |GL_n(q)| / (|Z_GL(J)| |GL_m0(q)|) where J is the nonzero part of ct
    """
    return gl_order(ct.n, q) // (gl_centralizer_order(ct.nonzero_part(), q)
                                 * gl_order(ct.zero_mult, q))


def good_counts(q: int, L: int, n: int) -> dict[int, int]:
    return {d: d_plain(q, L, d, strict=False) for d in range(1, n + 1)}


def _zero_block_sum(task: tuple[int, int, int, int, bool]) -> int:
    n, q, L, zero_mult, regular_only = task
    good = good_counts(q, L, n)
    total = 0
    for ct in class_types(n, zero_mult):
        if regular_only and not ct.is_regular_semisimple():
            continue
        ways = assignment_count(ct, good)
        if ways:
            total += ways * class_size(ct, q)
    return total


def exact_periodic_count(family: GroupFamily, n: int, q: int, L: int, strict: bool = True,
                         max_n: int = CLASS_COUNT_MAX_N, regular_semisimple_only: bool = False,
                         jobs: int = 1) -> int:
    """
    Number of periodic points of X -> X^L on M_n(q) or GL_n(q)

    :param family: GroupFamily.M or GroupFamily.GL
    :param strict: Enforce delta_L(p) | d
    :param max_n: Largest accepted dimension
    :param regular_semisimple_only: Restrict the sum to regular semisimple class types
    :param jobs: Worker processes, one task per zero eigenvalue multiplicity
    :raises HypothesisError: violated hypotheses, unsupported family or n out of range
    """
    params = CountParams(q, L, n)
    if strict:
        params.require_delta_divides_d()
    if family not in (GroupFamily.M, GroupFamily.GL):
        raise HypothesisError(f"class based counts are only available for M and GL, "
                              f"not {family.value}")
    if n > max_n:
        raise HypothesisError(f"class based count limited to n <= {max_n}, got {n}")

    zero_mults = [0] if family == GroupFamily.GL or regular_semisimple_only else range(n + 1)
    tasks = [(n, q, L, m0, regular_semisimple_only) for m0 in zero_mults]
    count = parallel_sum(_zero_block_sum, tasks, jobs, desc=f"classes of {family.value}_{n}")
    logger.info("class count %s_%d(%d), L=%d: %d", family.value, n, q, L, count)
    return count


def periodic_ratio(family: GroupFamily, n: int, q: int, L: int, **kwargs) -> Fraction:
    """
    Periodic points divided by |GL_n(q)| or q^(n^2)
    """
    total = gl_order(n, q) if family == GroupFamily.GL else q ** (n * n)
    return Fraction(exact_periodic_count(family, n, q, L, **kwargs), total)


# ------------------------------
# CLASS TABLES
# ------------------------------

def _table_params(q: int, L: int) -> dict[int, int]:
    CountParams(q, L).require_delta_divides_d()
    return good_counts(q, L, 3)


def m2_contributions(q: int, L: int) -> list[tuple[str, int]]:
    """
    Per class type contributions to the periodic points of M_2(q)
    """
    d1, d2 = (good := _table_params(q, L))[1], good[2]
    return [
        ("alpha I", d1 + 1),
        ("diag(alpha, beta)", d1 * (d1 + 1) // 2 * (q * q + q)),
        ("J_2(alpha)", d1 * (q * q - 1)),
        ("irreducible quadratic", d2 * (q * q - q)),
    ]


def m2_closed(q: int, L: int) -> int:
    """
    (d1 + 1) + d1 (d1 + 1)(q^2 + q) / 2 + d1 (q^2 - 1) + d2 (q^2 - q)
    """
    return sum(value for _, value in m2_contributions(q, L))


def m3_contributions(q: int, L: int, verbatim: bool = False) -> list[tuple[str, int]]:
    """
    Per class type contributions to the periodic points of M_3(q).

    :param verbatim: Use the printed diag(alpha, alpha, beta) row, which multiplies by the
                     class size of J_2(alpha) + beta instead of q^2 (q^2 + q + 1)
    """
    good = _table_params(q, L)
    d1, d2, d3 = good[1], good[2], good[3]
    q2, q3 = q ** 2, q ** 3
    repeated = q2 * (q3 - 1) * (q + 1) if verbatim else q2 * (q2 + q + 1)
    return [
        ("alpha I", d1 + 1),
        ("J_3(alpha)", d1 * q * (q3 - 1) * (q2 - 1)),
        ("J_2(alpha) + alpha", d1 * (q3 - 1) * (q + 1)),
        ("diag(alpha, beta, gamma)", comb(d1 + 1, 3) * q3 * (q + 1) * (q2 + q + 1)),
        ("diag(alpha, alpha, beta)", d1 * (d1 + 1) * repeated),
        ("J_2(alpha) + beta", d1 * d1 * q2 * (q3 - 1) * (q + 1)),
        ("irreducible cubic", d3 * q3 * (q2 - 1) * (q - 1)),
        ("alpha + irreducible quadratic", (d1 + 1) * d2 * q3 * (q3 - 1)),
    ]


def m3_closed(q: int, L: int, verbatim: bool = False) -> int:
    return sum(value for _, value in m3_contributions(q, L, verbatim))
