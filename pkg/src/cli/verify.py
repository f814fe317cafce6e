"""
The verify harness: formula versus oracle suites over fixed grids.

Each check has a work size (the number of objects it enumerates). Checks larger than the
budget are reported as skipped, so a report depends only on the suite and the budget and
never on timing or on the number of worker processes.
"""

from collections.abc import Callable
from fractions import Fraction
from math import gcd

import numpy as np

from src.algebra import batch
from src.algebra.field import field_for_order, prime_power
from src.algebra.matrix import Matrix
from src.classes.class_type import ClassType, class_types, gl_centralizer_order, representative
from src.classes.exact_count import exact_periodic_count, m2_closed, m3_closed, periodic_ratio
from src.classes.limits import displayed_limit_m2, displayed_limit_m3, limit_gl, limit_sp_u
from src.cli.config import CheckResult, VerifyReport
from src.console import get_logger
from src.constants import CountKind, GroupFamily, MATRIX_BATCH_SIZE, VERIFY_CENTRALIZER_SPACES, \
    VERIFY_CONVERGENCE_QS, VERIFY_DYNAMICS_SPACES, VERIFY_EXACT_SPACES, VERIFY_FIELD_LS, \
    VERIFY_FIELD_MAX_Q, VERIFY_LEMMA_LS, VERIFY_LEMMA_QS, VERIFY_NORMALIZATION_MAX_ELL, \
    VERIFY_PLAIN_MAX_N, VERIFY_SELF_CONJUGATE_MAX_N, VERIFY_SELF_RECIPROCAL_MAX_N, VerifySuite
from src.counting.lemmas import d_plain, d_self_conjugate, d_self_conjugate_verbatim, \
    d_self_reciprocal, d_self_reciprocal_verbatim
from src.counting.oracle import oracle_count, oracle_size
from src.counting.valuation import CountParams, e_value
from src.dynamics.orbit import field_orbit_report, orbit_report
from src.dynamics.periodic import field_periodic_set, is_periodic_structural, periodic_mask
from src.errors import FfdynError, GuardExceededError, HypothesisError
from src.groups.brute import brute_periodic_count, centralizer_order_brute
from src.groups.kinds import GroupKind, group_order
from src.workers import parallel_sum, split_range

logger = get_logger(__name__)

CYCLE_EXAMPLE_ROWS: list[list[int]] = [[0, 42], [1, 31]]
CYCLE_EXAMPLE_Q: int = 59
CYCLE_EXAMPLE_PERIOD: int = 28


class Verifier:
    """
    Collects check results under a work budget
    """

    # ------------------------------
    # Class fields
    # ------------------------------

    budget: int
    jobs: int
    checks: list[CheckResult]

    # ------------------------------
    # Class creation
    # ------------------------------

    def __init__(self, budget: int, jobs: int = 1) -> None:
        self.budget = budget
        self.jobs = jobs
        self.checks = []

    # ------------------------------
    # Class interaction
    # ------------------------------

    def run(self, name: str, params: dict[str, object], size: int,
            compute: Callable[[], tuple[object, object]]) -> None:
        """
        Runs compute() -> (expected, got) unless size exceeds the budget. A guard hit is
        recorded as skipped; any other error raised by compute() is recorded as a failure
        """
        shown = {key: str(value) for key, value in params.items()}
        if size > self.budget:
            self.checks.append(CheckResult(name=name, params=shown, expected="", got="",
                                           status="skipped"))
            return
        try:
            expected, got = compute()
        except GuardExceededError as e:
            logger.info("check %s %s skipped: %s", name, shown, e)
            self.checks.append(CheckResult(name=name, params=shown, expected="", got="",
                                           status="skipped"))
            return
        except (FfdynError, ValueError, ArithmeticError) as e:
            logger.warning("check %s %s raised: %s", name, shown, e)
            self.checks.append(CheckResult(name=name, params=shown, expected="",
                                           got=f"{type(e).__name__}: {e}", status="fail"))
            return
        status = "pass" if expected == got else "fail"
        if status == "fail":
            logger.warning("check %s %s failed: expected %s, got %s", name, shown, expected, got)
        self.checks.append(CheckResult(name=name, params=shown, expected=str(expected),
                                       got=str(got), status=status))

    @property
    def passed(self) -> bool:
        return all(c.status != "fail" for c in self.checks)


def _holds(hypothesis: Callable[[], object]) -> bool:
    try:
        hypothesis()
    except HypothesisError:
        return False
    return True


def _valid_pairs(qs: list[int], ls: list[int]) -> list[tuple[int, int]]:
    return [(q, L) for q in qs for L in ls if gcd(q, L) == 1]


# ------------------------------
# LEMMAS
# ------------------------------

def lemma_grid() -> list[tuple[CountKind, int, int, int]]:
    """
    Every (kind, q, L, n) of the lemma grid whose hypotheses hold
    """
    grid = []
    for q, L in _valid_pairs(VERIFY_LEMMA_QS, VERIFY_LEMMA_LS):
        for n in range(1, VERIFY_PLAIN_MAX_N + 1):
            if _holds(lambda: CountParams(q, L, n).require_delta_divides_d()):
                grid.append((CountKind.PLAIN, q, L, n))
        for n in range(1, VERIFY_SELF_RECIPROCAL_MAX_N + 1):
            if _holds(lambda: d_self_reciprocal(q, L, n)):
                grid.append((CountKind.SELF_RECIPROCAL, q, L, n))
        for n in range(1, VERIFY_SELF_CONJUGATE_MAX_N + 1):
            if _holds(lambda: d_self_conjugate(q, L, n)):
                grid.append((CountKind.SELF_CONJUGATE, q, L, n))
    return grid


LEMMA_FORMULAS: dict[CountKind, Callable[[int, int, int], int]] = {
    CountKind.PLAIN: d_plain,
    CountKind.SELF_RECIPROCAL: d_self_reciprocal,
    CountKind.SELF_CONJUGATE: d_self_conjugate,
}

LEMMA_VERBATIM: dict[CountKind, Callable[[int, int, int], Fraction]] = {
    CountKind.SELF_RECIPROCAL: d_self_reciprocal_verbatim,
    CountKind.SELF_CONJUGATE: d_self_conjugate_verbatim,
}


def suite_lemmas(v: Verifier) -> None:
    """
    Closed forms against the enumeration oracle over the (q, L, n) grid
    """
    for kind, q, L, n in lemma_grid():
        params: dict[str, object] = {"q": q, "L": L, "n": n}
        if kind in LEMMA_VERBATIM:
            params["paper_verbatim"] = LEMMA_VERBATIM[kind](q, L, n)
        v.run(kind.value, params, oracle_size(kind, q, L, n),
              lambda: (LEMMA_FORMULAS[kind](q, L, n),
                       oracle_count(kind, q, L, n, v.jobs, v.budget)))


# ------------------------------
# DYNAMICS
# ------------------------------

def _space_disagreements(task: tuple[int, int, int, int, int]) -> int:
    n, q, L, start, stop = task
    field = field_for_order(q)
    mats = batch.decode_matrices(np.arange(start, stop, dtype=np.int64), field, n)
    verdicts = periodic_mask(mats, field, L)
    wrong = 0
    for entries, verdict in zip(mats, verdicts):
        a = Matrix(field, entries)
        if not is_periodic_structural(a, L) == orbit_report(a, L).periodic == bool(verdict):
            wrong += 1
    return wrong


def space_disagreements(n: int, q: int, L: int, jobs: int = 1) -> int:
    """
    Matrices of M_n(q) on which the structural, orbit and power identity verdicts differ
    """
    size = q ** (n * n)
    tasks = [(n, q, L, start, stop)
             for start, stop in split_range(size, jobs, min(MATRIX_BATCH_SIZE, 4096))]
    return parallel_sum(_space_disagreements, tasks, jobs, desc=f"M_{n}({q}) L={L}")


def _field_sets(q: int, L: int) -> tuple[object, object]:
    """
    (1 + e_1, size of the orbit-periodic set), or a note when the two sets differ
    """
    field = field_for_order(q)
    predicted = {x.index for x in field_periodic_set(field, L)}
    orbits = {x.index for x in field.elements() if field_orbit_report(x, L).periodic}
    return 1 + e_value(q, L, 1), len(orbits) if orbits == predicted else "sets differ"


def suite_dynamics(v: Verifier) -> None:
    """
    The F_59 cycle, field periodicity and structural versus orbit periodicity
    """
    def cycle() -> tuple[object, object]:
        a = Matrix.from_rows(field_for_order(CYCLE_EXAMPLE_Q), CYCLE_EXAMPLE_ROWS)
        report = orbit_report(a, 2)
        return (0, CYCLE_EXAMPLE_PERIOD), (report.preperiod, report.period)

    v.run("cycle-example", {"q": CYCLE_EXAMPLE_Q, "L": 2}, CYCLE_EXAMPLE_PERIOD, cycle)

    field_qs = [q for q in range(2, VERIFY_FIELD_MAX_Q + 1) if _holds(lambda: prime_power(q))]
    for q, L in _valid_pairs(field_qs, VERIFY_FIELD_LS):
        v.run("field-periodic", {"q": q, "L": L}, q, lambda: _field_sets(q, L))

    for n, q in VERIFY_DYNAMICS_SPACES:
        for L in VERIFY_FIELD_LS:
            if _holds(lambda: CountParams(q, L, n).require_delta_divides_d()):
                v.run("structural-orbit", {"n": n, "q": q, "L": L}, q ** (n * n),
                      lambda: (0, space_disagreements(n, q, L, v.jobs)))


# ------------------------------
# CLASSES
# ------------------------------

def _centralizer_pair(ct: ClassType, q: int) -> tuple[int, int]:
    rep = representative(ct, field_for_order(q))
    return gl_centralizer_order(ct, q), centralizer_order_brute(rep)


def suite_classes(v: Verifier) -> None:
    """
    Class counts against brute force and the closed forms, centralizer orders against
    commutant scans
    """
    for n, q in VERIFY_EXACT_SPACES:
        for L in VERIFY_FIELD_LS:
            if not _holds(lambda: CountParams(q, L, n).require_delta_divides_d()):
                continue
            for family in (GroupFamily.M, GroupFamily.GL):
                kind = GroupKind(family, n, q)
                v.run("exact-brute", {"family": family.value, "n": n, "q": q, "L": L},
                      kind.space_size,
                      lambda: (exact_periodic_count(family, n, q, L),
                               brute_periodic_count(kind, L, v.jobs, filter_guard=v.budget,
                                                    closure_guard=v.budget)))
            if n in (2, 3):
                closed = m2_closed if n == 2 else m3_closed
                v.run("exact-closed", {"n": n, "q": q, "L": L}, 1,
                      lambda: (closed(q, L), exact_periodic_count(GroupFamily.M, n, q, L)))

    for q, L in ((7, 3), (13, 3), (59, 2)):
        for n, closed in ((2, m2_closed), (3, m3_closed)):
            v.run("exact-closed", {"n": n, "q": q, "L": L}, 1,
                  lambda: (closed(q, L), exact_periodic_count(GroupFamily.M, n, q, L)))

    for n, q in VERIFY_CENTRALIZER_SPACES:
        field = field_for_order(q)
        for ct in class_types(n):
            if representative(ct, field) is None:
                continue
            v.run("centralizer", {"n": n, "q": q, "type": ct.blocks}, q ** (n * n),
                  lambda: _centralizer_pair(ct, q))


# ------------------------------
# LIMITS
# ------------------------------

def _trend(gaps: list[Fraction], final: Fraction, strict: bool) -> tuple[object, object]:
    """
    (expected, got) pair for a convergence check: gaps decrease (strictly or not) and the
    last one is below final
    """
    steps = [a > b if strict else a >= b for a, b in zip(gaps, gaps[1:])]
    return True, all(steps) and gaps[-1] < final


def _class_gaps(family: GroupFamily, qs: list[int]) -> list[Fraction]:
    target = limit_gl(2, 3, 1)
    return [abs(periodic_ratio(family, 2, q, 3) - target) for q in qs]


def _sp2_gaps(qs: list[int]) -> list[Fraction]:
    target = limit_sp_u(1, 3, 1)
    gaps = []
    for q in qs:
        kind = GroupKind(GroupFamily.SP, 2, q)
        gaps.append(abs(Fraction(brute_periodic_count(kind, 3), group_order(kind)) - target))
    return gaps


def _regular_gap(q: int) -> Fraction:
    full = periodic_ratio(GroupFamily.GL, 2, q, 3)
    return abs(full - periodic_ratio(GroupFamily.GL, 2, q, 3, regular_semisimple_only=True))


def suite_limits(v: Verifier) -> None:
    """
    Normalization identities, worked values and convergence trends
    """
    for ell in range(1, VERIFY_NORMALIZATION_MAX_ELL + 1):
        v.run("normalization-gl", {"ell": ell}, 1,
              lambda: (Fraction(1), limit_gl(ell, 3, 1, normalized=True)))
        v.run("normalization-sp-u", {"ell": ell}, 1,
              lambda: (Fraction(1), limit_sp_u(ell, 3, 1, normalized=True)))

    v.run("limit-gl", {"ell": 2, "L": 3, "c": 1}, 1, lambda: (Fraction(2, 9), limit_gl(2, 3, 1)))
    v.run("limit-gl", {"ell": 3, "L": 3, "c": 1}, 1, lambda: (Fraction(8, 81), limit_gl(3, 3, 1)))
    v.run("limit-sp-u", {"ell": 1, "L": 3, "c": 1}, 1,
          lambda: (Fraction(2, 3), limit_sp_u(1, 3, 1)))
    for L, c in ((3, 1), (3, 2), (5, 1), (7, 1)):
        v.run("leading-term-m2", {"L": L, "c": c}, 1,
              lambda: (displayed_limit_m2(L, c), limit_gl(2, L, c)))
        v.run("leading-term-m3", {"L": L, "c": c}, 1,
              lambda: (displayed_limit_m3(L, c), limit_gl(3, L, c)))

    qs = VERIFY_CONVERGENCE_QS
    v.run("convergence-gl", {"ell": 2, "L": 3, "qs": qs}, 1,
          lambda: _trend(_class_gaps(GroupFamily.GL, qs), Fraction(1, 10), strict=False))
    v.run("convergence-m", {"ell": 2, "L": 3, "qs": qs}, 1,
          lambda: _trend(_class_gaps(GroupFamily.M, qs), Fraction(1, 10), strict=True))
    v.run("convergence-sp", {"ell": 1, "L": 3, "qs": qs},
          group_order(GroupKind(GroupFamily.SP, 2, max(qs))),
          lambda: _trend(_sp2_gaps(qs), Fraction(1, 8), strict=False))
    for q in qs:
        v.run("regular-semisimple", {"ell": 2, "L": 3, "q": q}, 1,
              lambda: (True, _regular_gap(q) < Fraction(10, q)))


SUITES: dict[VerifySuite, Callable[[Verifier], None]] = {
    VerifySuite.LEMMAS: suite_lemmas,
    VerifySuite.DYNAMICS: suite_dynamics,
    VerifySuite.CLASSES: suite_classes,
    VerifySuite.LIMITS: suite_limits,
}


def cmd_verify(suite: VerifySuite, budget: int, jobs: int = 1) -> VerifyReport:
    """
    Runs one suite (or all of them, in a fixed order) and collects every check
    """
    v = Verifier(budget, jobs)
    selected = list(SUITES) if suite == VerifySuite.ALL else [suite]
    for name in selected:
        logger.info("running verify suite %s", name.value)
        SUITES[name](v)
    return VerifyReport(params={"suite": suite.value, "budget": budget}, checks=v.checks,
                        passed=v.passed)
