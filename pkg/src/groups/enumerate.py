"""
Desk-scale enumeration of M_n(q), GL_n(q), Sp_n(q) and U_n(q).

Three strategies:
    FILTER  scan every matrix index and keep members (streamed, never materialised);
    SL2     parametrise Sp_2(q) = SL_2(q) directly;
    CLOSURE breadth-first products of a random generating set of transvections / unitary
            reflections, accepted only when the closure reaches group_order.
Materialised element stacks may be cached as .npz files under $FFDYN_CACHE.
"""

import os
from pathlib import Path
from typing import Iterator

import numpy as np

from src.algebra import batch
from src.algebra.field import FieldElem, FieldSpec, conj_q
from src.algebra.matrix import Matrix
from src.console import get_logger
from src.constants import CLOSURE_ATTEMPTS, CLOSURE_POOL_SIZE, CLOSURE_SEED, ENV_CACHE_DIR, \
    EnumerationMethod, FILTER_PREFERRED_LIMIT, GROUP_CLOSURE_GUARD, GROUP_FILTER_GUARD, \
    GroupFamily, MATRIX_BATCH_SIZE
from src.errors import VerificationMismatch, check_guard
from src.groups.kinds import GroupKind, group_order, is_member, member_mask, symplectic_form

logger = get_logger(__name__)


def choose_method(kind: GroupKind) -> EnumerationMethod:
    """
    FILTER for M / GL and small Sp / U, SL2 for larger Sp_2, CLOSURE otherwise
    """
    if kind.family in (GroupFamily.M, GroupFamily.GL):
        return EnumerationMethod.FILTER
    if kind.space_size <= FILTER_PREFERRED_LIMIT:
        return EnumerationMethod.FILTER
    if kind.family == GroupFamily.SP and kind.n == 2:
        return EnumerationMethod.SL2
    return EnumerationMethod.CLOSURE


def filter_chunk(kind: GroupKind, start: int, stop: int) -> np.ndarray:
    """
    Members of the group among matrix indices [start, stop)
    """
    mats = batch.decode_matrices(np.arange(start, stop, dtype=np.int64), kind.field, kind.n)
    return mats[member_mask(kind, mats)]


def iter_filter_batches(kind: GroupKind, start: int = 0, stop: int | None = None,
                        batch_size: int = MATRIX_BATCH_SIZE) -> Iterator[np.ndarray]:
    stop = kind.space_size if stop is None else stop
    for lo in range(start, stop, batch_size):
        yield filter_chunk(kind, lo, min(lo + batch_size, stop))


# ------------------------------
# SL_2 parametrisation
# ------------------------------

def sl2_elements(field: FieldSpec) -> np.ndarray:
    """
    All [[a, b], [c, d]] with ad - bc = 1: d = (1 + bc) / a when a != 0, and c = -1/b
    with d free when a = 0. Shape (q(q^2 - 1), 2, 2, d).
    """
    q = field.q
    elems = batch.decode_digits(np.arange(q), field.p, field.d)
    one = np.zeros(field.d, dtype=np.int64)
    one[0] = 1

    ia, ib, ic = np.indices((q - 1, q, q)).reshape(3, -1)
    a, b, c = elems[ia + 1], elems[ib], elems[ic]
    d = batch.field_mul((one + batch.field_mul(b, c, field)) % field.p,
                        batch.field_inv(a, field), field)
    generic = np.stack([np.stack([a, b], axis=1), np.stack([c, d], axis=1)], axis=1)

    jb, jd = np.indices((q - 1, q)).reshape(2, -1)
    b, d = elems[jb + 1], elems[jd]
    c = (-batch.field_inv(b, field)) % field.p
    zero = np.zeros_like(b)
    special = np.stack([np.stack([zero, b], axis=1), np.stack([c, d], axis=1)], axis=1)
    return np.concatenate([generic, special])


# ------------------------------
# CLOSURE
# ------------------------------

def _random_vector(rng: np.random.Generator, field: FieldSpec, n: int) -> list[FieldElem]:
    return [field.element(int(i)) for i in rng.integers(0, field.q, size=n)]


def _outer(field: FieldSpec, u: list[FieldElem], v: list[FieldElem], scale: FieldElem) -> Matrix:
    return Matrix.from_rows(field, [[scale * ui * vj for vj in v] for ui in u])


def symplectic_transvection(field: FieldSpec, v: list[FieldElem], a: FieldElem) -> Matrix:
    """
    x -> x + a B(x, v) v with B(x, y) = x^T J y, i.e. I - a v v^T J
    """
    n = len(v)
    j_rows = symplectic_form(field, n).rows()
    vj = [sum((v[k] * j_rows[k][col] for k in range(n)), field.zero) for col in range(n)]
    return Matrix.identity(field, n) - _outer(field, v, vj, a)


def _hermitian(field: FieldSpec, v: list[FieldElem]) -> FieldElem:
    return sum((conj_q(x) * x for x in v), field.zero)


def unitary_transvection(field: FieldSpec, v: list[FieldElem], a: FieldElem) -> Matrix:
    """
    I + a v v* for isotropic v (v* v = 0) and a^q = -a
    """
    return Matrix.identity(field, len(v)) + _outer(field, v, [conj_q(x) for x in v], a)


def unitary_reflection(field: FieldSpec, v: list[FieldElem], zeta: FieldElem) -> Matrix:
    """
    I - ((1 - zeta) / v*v) v v* for anisotropic v and zeta^(q+1) = 1
    """
    kappa = (field.one - zeta) / _hermitian(field, v)
    return Matrix.identity(field, len(v)) - _outer(field, v, [conj_q(x) for x in v], kappa)


def _draw_generator(kind: GroupKind, rng: np.random.Generator) -> Matrix:
    field, n = kind.field, kind.n
    while True:
        v = _random_vector(rng, field, n)
        if all(x.is_zero() for x in v):
            continue
        if kind.family == GroupFamily.SP:
            a = field.element(int(rng.integers(1, field.q)))
            return symplectic_transvection(field, v, a)
        norm = _hermitian(field, v)
        if norm.is_zero():
            skew = [x for x in field.nonzero_elements() if conj_q(x) == -x]
            return unitary_transvection(field, v, skew[int(rng.integers(0, len(skew)))])
        zetas = [x for x in field.nonzero_elements()
                 if (conj_q(x) * x).is_one() and not x.is_one()]
        return unitary_reflection(field, v, zetas[int(rng.integers(0, len(zetas)))])


def _keys(mats: np.ndarray) -> list[bytes]:
    flat = np.ascontiguousarray(mats.reshape(mats.shape[0], -1).astype(np.int32))
    return [row.tobytes() for row in flat]


def closure(kind: GroupKind, generators: list[Matrix], limit: int) -> np.ndarray | None:
    """
    Breadth-first closure of the generators under right multiplication.

    :return: Element stack, or None when the closure stops short of limit
    :raises VerificationMismatch: closure grows past limit
    """
    field, n = kind.field, kind.n
    gens = np.stack([g.entries for g in generators])
    start = batch.mat_identity(1, n, field)
    seen = set(_keys(start))
    found = [start]
    frontier = start
    while frontier.shape[0]:
        products = batch.mat_mul(frontier[:, None], gens[None], field).reshape(-1, n, n, field.d)
        fresh = []
        for key, mat in zip(_keys(products), products):
            if key not in seen:
                seen.add(key)
                fresh.append(mat)
        if len(seen) > limit:
            raise VerificationMismatch(f"closure of {kind.label()}", limit, len(seen))
        frontier = np.stack(fresh) if fresh else products[:0]
        if fresh:
            found.append(frontier)
        logger.debug("closure %s: %d elements", kind.label(), len(seen))
    elements = np.concatenate(found)
    return elements if elements.shape[0] == limit else None


def closure_elements(kind: GroupKind, guard: int = GROUP_CLOSURE_GUARD) -> np.ndarray:
    """
    Enumerates a symplectic or unitary group by closure from random generators, retrying
    with more generators until the closure reaches group_order.

    :raises GuardExceededError: |G| above guard
    :raises VerificationMismatch: no attempt reached group_order
    """
    order = group_order(kind)
    check_guard(f"closure of {kind.label()}", order, guard)
    for attempt in range(CLOSURE_ATTEMPTS):
        rng = np.random.default_rng(CLOSURE_SEED + attempt)
        generators = [_draw_generator(kind, rng)
                      for _ in range(CLOSURE_POOL_SIZE + 2 * (attempt // 4))]
        for g in generators:
            if not is_member(kind, g):
                raise VerificationMismatch(f"generator of {kind.label()} is not a member",
                                           True, False)
        elements = closure(kind, generators, order)
        if elements is not None:
            logger.info("closure %s reached %d elements on attempt %d", kind.label(), order,
                        attempt)
            return elements
        logger.debug("closure %s attempt %d generated a proper subgroup", kind.label(), attempt)
    raise VerificationMismatch(f"closure of {kind.label()} after {CLOSURE_ATTEMPTS} attempts",
                               order, "a proper subgroup")


# ------------------------------
# CACHE
# ------------------------------

def cache_path(kind: GroupKind) -> Path | None:
    directory = os.environ.get(ENV_CACHE_DIR)
    if not directory:
        return None
    field = kind.field
    return Path(directory) / f"{kind.family.value}_{kind.n}_{field.p}_{field.d}.npz"


def load_cached(kind: GroupKind) -> np.ndarray | None:
    path = cache_path(kind)
    if path is None or not path.exists():
        return None
    field = kind.field
    with np.load(path) as archive:
        header = archive["header"]
        elements = archive["elements"]
    expected = [kind.n, field.p, field.d, field.base_degree or 0]
    if list(header) != expected or elements.shape[0] != group_order(kind):
        logger.warning("discarding stale group cache %s", path)
        return None
    return elements.astype(np.int64)


def store_cached(kind: GroupKind, elements: np.ndarray) -> None:
    path = cache_path(kind)
    if path is None:
        return
    field = kind.field
    path.parent.mkdir(parents=True, exist_ok=True)
    np.savez_compressed(path, elements=elements.astype(np.int32),
                        header=np.array([kind.n, field.p, field.d, field.base_degree or 0]))


def group_elements(kind: GroupKind, method: EnumerationMethod | None = None,
                   filter_guard: int = GROUP_FILTER_GUARD,
                   closure_guard: int = GROUP_CLOSURE_GUARD) -> np.ndarray:
    """
    Materialised element stack of shape (|G|, n, n, d)

    :raises GuardExceededError: enumeration above its guard
    :raises VerificationMismatch: enumeration size differs from group_order
    """
    method = choose_method(kind) if method is None else method
    cached = load_cached(kind)
    if cached is not None:
        return cached
    if method == EnumerationMethod.FILTER:
        check_guard(f"filter scan of {kind.label()}", kind.space_size, filter_guard)
        elements = np.concatenate(list(iter_filter_batches(kind)))
    elif method == EnumerationMethod.SL2:
        if kind.family != GroupFamily.SP or kind.n != 2:
            raise ValueError("SL2 parametrisation only applies to Sp_2")
        check_guard(f"SL_2 parametrisation of {kind.label()}", group_order(kind), closure_guard)
        elements = sl2_elements(kind.field)
    else:
        elements = closure_elements(kind, closure_guard)
    if elements.shape[0] != group_order(kind):
        raise VerificationMismatch(f"enumeration of {kind.label()}", group_order(kind),
                                   elements.shape[0])
    store_cached(kind, elements)
    return elements


def enumerate_group(kind: GroupKind, method: EnumerationMethod | None = None) -> Iterator[Matrix]:
    """
    Yields every element of the group exactly once
    """
    method = choose_method(kind) if method is None else method
    if method == EnumerationMethod.FILTER:
        check_guard(f"filter scan of {kind.label()}", kind.space_size, GROUP_FILTER_GUARD)
        for chunk in iter_filter_batches(kind):
            for entries in chunk:
                yield Matrix(kind.field, entries)
        return
    for entries in group_elements(kind, method):
        yield Matrix(kind.field, entries)
