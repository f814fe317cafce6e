"""
Brute-force enumeration oracle for the counting lemmas.

Candidates are built directly in index order. The constant term runs over the values a
qualifying polynomial can have (its root norm lies in mu_gcd(e, q - 1), and the transform
fixes it up to mu_2 or mu_(q+1)); the remaining free coefficients run over every value and
the ones the transform determines are filled in. Vectorised filters (fixedness under the
transform, t^e = 1 mod f) run next; only the survivors get a full irreducibility test.
"""

from math import gcd

import numpy as np

from src.algebra import batch
from src.algebra.field import FieldSpec, elem_pow, field_for_order, make_field, \
    make_unitary_field, prime_power
from src.algebra.poly import Poly, is_irreducible
from src.console import get_logger
from src.constants import CountKind, MATRIX_BATCH_SIZE, POLY_ENUMERATION_GUARD
from src.counting.lemmas import e_for_kind
from src.counting.valuation import CountParams
from src.errors import check_guard
from src.workers import parallel_sum, split_range

logger = get_logger(__name__)


def _oracle_field(kind: CountKind, q: int) -> FieldSpec:
    return make_unitary_field(q) if kind == CountKind.SELF_CONJUGATE else field_for_order(q)


def _oracle_degree(kind: CountKind, n: int) -> int:
    return 2 * n if kind == CountKind.SELF_RECIPROCAL else n


def _free_width(kind: CountKind, degree: int) -> int:
    """
    Number of coefficients after the constant term that are chosen freely
    """
    return degree - 1 if kind == CountKind.PLAIN else degree // 2


def constant_terms(kind: CountKind, field: FieldSpec, degree: int, e: int) -> np.ndarray:
    """
    Residues of the possible constant terms, shape (M, d).

    f(0) = (-1)^deg N(alpha) and alpha^e = 1 force f(0)^gcd(e, |F*|) = (-1)^(deg gcd);
    a self-reciprocal f has f(0)^2 = 1 and a self-conjugate f has f(0)^(q+1) = 1.
    """
    elems = batch.decode_digits(np.arange(1, field.q, dtype=np.int64), field.p, field.d)
    signed = elems if degree % 2 == 0 else (-elems) % field.p
    mask = batch.is_one(batch.field_pow(signed, gcd(e, field.q - 1), field))
    if kind == CountKind.SELF_RECIPROCAL:
        mask &= batch.is_one(batch.field_pow(elems, 2, field))
    elif kind == CountKind.SELF_CONJUGATE:
        mask &= batch.is_one(batch.field_pow(elems, field.p ** field.base_degree + 1, field))
    return elems[mask]


def oracle_size(kind: CountKind, q: int, L: int, n: int) -> int:
    """
    Number of candidate polynomials the oracle builds:
    #constant terms * q^(free coefficients)

    :raises HypothesisError: gcd(L, q) != 1
    """
    field = _oracle_field(kind, q)
    degree = _oracle_degree(kind, n)
    consts = constant_terms(kind, field, degree, e_for_kind(kind, q, L, n))
    return consts.shape[0] * field.q ** _free_width(kind, degree)


def build_candidates(kind: CountKind, field: FieldSpec, degree: int, consts: np.ndarray,
                     indices: np.ndarray) -> np.ndarray:
    """
    Non-leading coefficients (N, degree, d) of the candidates with the given indices.

    Index k takes its constant term from consts[k // q^w] and its w free coefficients from
    the base-q digits of k mod q^w. A self-reciprocal f has c_(deg-i) = c_0 c_i; a
    self-conjugate f has c_(deg-i) = c_i^q / c_0^q.
    """
    width = _free_width(kind, degree)
    span = field.q ** width
    c0 = consts[indices // span]
    free = batch.decode_digits(indices % span, field.p, width * field.d) \
        .reshape(-1, width, field.d)
    polys = np.zeros((indices.shape[0], degree, field.d), dtype=np.int64)
    polys[:, 0] = c0
    polys[:, 1:width + 1] = free
    if kind == CountKind.SELF_RECIPROCAL:
        for i in range(1, width):
            polys[:, degree - i] = batch.field_mul(c0, free[:, i - 1], field)
    elif kind == CountKind.SELF_CONJUGATE:
        inv = batch.field_inv(batch.frobenius(c0, field, field.base_degree), field)
        for i in range(1, width + 1):
            if degree - i != i:
                bar = batch.frobenius(free[:, i - 1], field, field.base_degree)
                polys[:, degree - i] = batch.field_mul(bar, inv, field)
    return polys


def _count_chunk(task: tuple[str, int, int, int, int, int, int]) -> int:
    """
    Counts qualifying candidates with index in [start, stop)
    """
    kind_value, q, degree, e, start, stop, batch_size = task
    kind = CountKind(kind_value)
    field = _oracle_field(kind, q)
    consts = constant_terms(kind, field, degree, e)
    found = 0
    for lo in range(start, stop, batch_size):
        indices = np.arange(lo, min(lo + batch_size, stop), dtype=np.int64)
        polys = build_candidates(kind, field, degree, consts, indices)
        if kind == CountKind.SELF_RECIPROCAL:
            polys = polys[batch.reciprocal_fixed(polys, field)]
        elif kind == CountKind.SELF_CONJUGATE:
            polys = polys[batch.conjugate_fixed(polys, field)]
        if polys.shape[0] == 0:
            continue
        survivors = polys[batch.is_one_poly(batch.t_power_mod_batch(polys, e, field))]
        for index in batch.encode_digits(survivors.reshape(survivors.shape[0], -1), field.p):
            if is_irreducible(Poly.from_index(field, degree, int(index))):
                found += 1
    return found


def oracle_count(kind: CountKind, q: int, L: int, n: int, jobs: int = 1,
                 guard: int = POLY_ENUMERATION_GUARD) -> int:
    """
    Counts by enumeration the monic irreducibles of the family `kind` whose roots satisfy
    alpha^e = 1 (degree n over F_q, degree 2n over F_q, degree n over F_{q^2}).

    :param kind: Polynomial family
    :param q: Field order
    :param L: Prime
    :param n: Degree parameter
    :param jobs: Worker processes
    :param guard: Largest number of candidates built
    :raises GuardExceededError: oracle_size above guard
    :raises HypothesisError: gcd(L, q) != 1
    """
    CountParams(q, L, n)
    size = oracle_size(kind, q, L, n)
    check_guard(f"{kind.value} oracle over q={q}, n={n}", size, guard)
    degree = _oracle_degree(kind, n)
    e = e_for_kind(kind, q, L, n)
    tasks = [(kind.value, q, degree, e, start, stop, MATRIX_BATCH_SIZE)
             for start, stop in split_range(size, jobs, MATRIX_BATCH_SIZE)]
    count = parallel_sum(_count_chunk, tasks, jobs, desc=f"oracle {kind.value}")
    logger.info("oracle %s q=%d L=%d n=%d: %d", kind.value, q, L, n, count)
    return count


def root_enumeration_count(q: int, n: int, e: int) -> int:
    """
    (1/n) #{alpha in F_{q^n} of degree exactly n over F_q with alpha^e = 1}, by listing the
    elements of F_{q^n} directly

    :raises HypothesisError: q^n beyond the field size limit
    """
    p, k = prime_power(q)
    big = make_field(p, k * n)
    proper = [m for m in range(1, n) if n % m == 0]
    hits = 0
    for alpha in big.nonzero_elements():
        if not elem_pow(alpha, e).is_one():
            continue
        if any(elem_pow(alpha, q ** m) == alpha for m in proper):
            continue
        hits += 1
    return hits // n
