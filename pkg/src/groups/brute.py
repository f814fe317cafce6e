"""
Brute-force periodic point counts inside M_n(q), GL_n(q), Sp_n(q) and U_n(q).

Each enumerated element is tested with the batched power identity A^(K+1) = A. A
deterministic sample of elements (every stride-th index) is re-decided by the structural
predicate and by orbit iteration, and any disagreement aborts the count.
"""

import numpy as np

from src.algebra import batch
from src.algebra.matrix import Matrix
from src.console import get_logger
from src.constants import CROSS_CHECK_SAMPLE, EnumerationMethod, GROUP_CLOSURE_GUARD, \
    GROUP_FILTER_GUARD, GroupFamily, MATRIX_BATCH_SIZE
from src.counting.valuation import CountParams
from src.dynamics.orbit import orbit_report
from src.dynamics.periodic import is_periodic_structural, periodic_mask
from src.errors import VerificationMismatch, check_guard
from src.groups.enumerate import choose_method, group_elements
from src.groups.kinds import GroupKind, member_mask
from src.workers import parallel_sum, split_range

logger = get_logger(__name__)


def _adjudicate(kind: GroupKind, L: int, mats: np.ndarray, verdicts: np.ndarray) -> None:
    for entries, verdict in zip(mats, verdicts):
        a = Matrix(kind.field, entries)
        structural = is_periodic_structural(a, L, strict=False)
        orbit = orbit_report(a, L).periodic
        if not structural == orbit == bool(verdict):
            raise VerificationMismatch(f"periodicity of {a} in {kind.label()}, L={L}",
                                       f"power identity {bool(verdict)}",
                                       f"structural {structural}, orbit {orbit}")


def _count_filter_chunk(task: tuple[tuple[str, int, int], int, int, int, int]) -> int:
    kind_task, L, start, stop, stride = task
    kind = GroupKind.from_task(kind_task)
    field = kind.field
    total = 0
    for lo in range(start, stop, MATRIX_BATCH_SIZE):
        indices = np.arange(lo, min(lo + MATRIX_BATCH_SIZE, stop), dtype=np.int64)
        mats = batch.decode_matrices(indices, field, kind.n)
        members = member_mask(kind, mats)
        mats, indices = mats[members], indices[members]
        verdicts = periodic_mask(mats, field, L)
        total += int(verdicts.sum())
        pick = indices % stride == 0
        _adjudicate(kind, L, mats[pick], verdicts[pick])
    return total


def _count_stack_chunk(task: tuple[tuple[str, int, int], int, np.ndarray, int, int]) -> int:
    kind_task, L, mats, offset, stride = task
    kind = GroupKind.from_task(kind_task)
    total = 0
    for lo in range(0, mats.shape[0], MATRIX_BATCH_SIZE):
        part = mats[lo:lo + MATRIX_BATCH_SIZE]
        verdicts = periodic_mask(part, kind.field, L)
        total += int(verdicts.sum())
        pick = (offset + lo + np.arange(part.shape[0])) % stride == 0
        _adjudicate(kind, L, part[pick], verdicts[pick])
    return total


def brute_periodic_count(kind: GroupKind, L: int, jobs: int = 1,
                         method: EnumerationMethod | None = None,
                         filter_guard: int = GROUP_FILTER_GUARD,
                         closure_guard: int = GROUP_CLOSURE_GUARD,
                         sample: int = CROSS_CHECK_SAMPLE) -> int:
    """
    Number of elements of the group that are periodic under X -> X^L, by exhaustion

    :param kind: Group
    :param L: Prime coprime to q
    :param jobs: Worker processes
    :param method: Enumeration strategy, chosen by choose_method when None
    :param filter_guard: Largest matrix space scanned by filtering
    :param closure_guard: Largest group materialised by SL2 / closure
    :param sample: Approximate number of elements cross-checked structurally and by orbits
    :raises GuardExceededError: enumeration above its guard
    :raises VerificationMismatch: cross-check disagreement or wrong enumeration size
    """
    CountParams(kind.q, L)
    method = choose_method(kind) if method is None else method
    if method == EnumerationMethod.FILTER:
        size = kind.space_size
        check_guard(f"filter scan of {kind.label()}", size, filter_guard)
        stride = max(1, size // max(sample, 1))
        tasks = [(kind.as_task(), L, start, stop, stride)
                 for start, stop in split_range(size, jobs, MATRIX_BATCH_SIZE)]
        count = parallel_sum(_count_filter_chunk, tasks, jobs, desc=f"periodic {kind.label()}")
    else:
        elements = group_elements(kind, method, filter_guard, closure_guard)
        size = elements.shape[0]
        stride = max(1, size // max(sample, 1))
        tasks = [(kind.as_task(), L, elements[start:stop], start, stride)
                 for start, stop in split_range(size, jobs, MATRIX_BATCH_SIZE)]
        count = parallel_sum(_count_stack_chunk, tasks, jobs, desc=f"periodic {kind.label()}")
    logger.info("periodic points of x^%d on %s: %d", L, kind.label(), count)
    return count


def centralizer_order_brute(a: Matrix) -> int:
    """
    |{X in GL_n(q) : XA = AX}| by scanning all of M_n(q)
    """
    kind = GroupKind(GroupFamily.GL, a.n, a.owner.q)
    check_guard(f"commutant scan of {kind.label()}", kind.space_size, GROUP_FILTER_GUARD)
    total = 0
    target = a.entries[None]
    for lo in range(0, kind.space_size, MATRIX_BATCH_SIZE):
        indices = np.arange(lo, min(lo + MATRIX_BATCH_SIZE, kind.space_size), dtype=np.int64)
        xs = batch.decode_matrices(indices, a.owner, a.n)
        left = batch.mat_mul(xs, np.broadcast_to(target, xs.shape), a.owner)
        right = batch.mat_mul(np.broadcast_to(target, xs.shape), xs, a.owner)
        commuting = (left == right).all(axis=(1, 2, 3)) & member_mask(kind, xs)
        total += int(commuting.sum())
    return total


def power_map_closed(kind: GroupKind, L: int) -> bool:
    """
    True iff A^L is again a member for every enumerated A
    """
    elements = group_elements(kind)
    powers = batch.mat_pow(elements, L, kind.field)
    return bool(member_mask(kind, powers).all())
