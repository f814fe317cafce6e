"""
Subcommand implementations. Each command validates its parameters, runs the requested
computations and returns a report model; main.py renders it and maps it to an exit code.
"""

import re
from collections.abc import Callable
from fractions import Fraction

from src.algebra.field import prime_power
from src.classes.exact_count import exact_periodic_count, m2_closed, m3_closed
from src.classes.limits import limit_gl, limit_sp_u
from src.cli.config import CountIrrReport, LimitReport, PeriodicReport, Report, RunConfig, \
    SweepReport, exact
from src.console import get_logger
from src.constants import CLASS_COUNT_MAX_N, CountKind, CountMethod, GROUP_CLOSURE_GUARD, \
    GROUP_FILTER_GUARD, GroupFamily, POLY_ENUMERATION_GUARD, PeriodicMethod, SWEEP_PATTERN
from src.counting.lemmas import d_plain, d_self_conjugate, d_self_conjugate_verbatim, \
    d_self_reciprocal, d_self_reciprocal_verbatim
from src.counting.oracle import oracle_count
from src.counting.valuation import CountParams, e_value
from src.errors import HypothesisError
from src.groups.brute import brute_periodic_count
from src.groups.kinds import GroupKind, group_order

logger = get_logger(__name__)


# ------------------------------
# count-irr
# ------------------------------

def count_formula(kind: CountKind, q: int, L: int, n: int) -> int:
    if kind == CountKind.PLAIN:
        return d_plain(q, L, n)
    if kind == CountKind.SELF_RECIPROCAL:
        return d_self_reciprocal(q, L, n)
    return d_self_conjugate(q, L, n)


def count_formula_verbatim(kind: CountKind, q: int, L: int, n: int) -> Fraction | None:
    if kind == CountKind.SELF_RECIPROCAL:
        return d_self_reciprocal_verbatim(q, L, n)
    if kind == CountKind.SELF_CONJUGATE:
        return d_self_conjugate_verbatim(q, L, n)
    return None


def cmd_count_irr(kind: CountKind, q: int, L: int, n: int, method: CountMethod,
                  config: RunConfig) -> CountIrrReport:
    """
    Closed form and / or enumeration count of monic irreducibles of the given family

    :raises HypothesisError: violated hypotheses of the family
    :raises GuardExceededError: oracle above the guard
    """
    params = CountParams(q, L, n)
    formula = oracle = None
    if method in (CountMethod.FORMULA, CountMethod.BOTH):
        formula = count_formula(kind, q, L, n)
    if method in (CountMethod.ORACLE, CountMethod.BOTH):
        oracle = oracle_count(kind, q, L, n, config.jobs, config.guard_or(POLY_ENUMERATION_GUARD))
    verbatim = count_formula_verbatim(kind, q, L, n) if method != CountMethod.ORACLE else None
    return CountIrrReport(
        params={"kind": kind.value, **params.as_dict()},
        method=method.value,
        formula=exact(formula),
        oracle=exact(oracle),
        agree=(formula == oracle) if method == CountMethod.BOTH else None,
        paper_verbatim=exact(verbatim),
    )


# ------------------------------
# periodic
# ------------------------------

def closed_count(family: GroupFamily, n: int, q: int, L: int, verbatim: bool = False) -> int:
    """
    Closed forms: M_1 (1 + e_1), GL_1 (e_1), M_2 and M_3 class tables

    :raises HypothesisError: no closed form for the family and dimension
    """
    CountParams(q, L, n).require_delta_divides_d()
    if n == 1 and family in (GroupFamily.M, GroupFamily.GL):
        return e_value(q, L, 1) + (family == GroupFamily.M)
    if family == GroupFamily.M and n == 2:
        return m2_closed(q, L)
    if family == GroupFamily.M and n == 3:
        return m3_closed(q, L, verbatim)
    raise HypothesisError(f"no closed form for {family.value}_{n}; closed forms exist for "
                          f"m_1, m_2, m_3 and gl_1")


def _available(family: GroupFamily, n: int) -> list[PeriodicMethod]:
    methods = []
    if family in (GroupFamily.M, GroupFamily.GL) and n <= CLASS_COUNT_MAX_N:
        methods.append(PeriodicMethod.CLASS)
    if (n == 1 and family == GroupFamily.GL) or (family == GroupFamily.M and n <= 3):
        methods.append(PeriodicMethod.CLOSED)
    methods.append(PeriodicMethod.BRUTE)
    return methods


def cmd_periodic(family: GroupFamily, n: int, q: int, L: int, method: PeriodicMethod,
                 config: RunConfig) -> PeriodicReport:
    """
    Periodic points of X -> X^L on M_n(q), GL_n(q), Sp_n(q) or U_n(q)

    :raises HypothesisError: invalid parameters or method unavailable for the family
    :raises GuardExceededError: brute force above the guard
    """
    kind = GroupKind(family, n, q)
    params = CountParams(q, L, n)
    available = _available(family, n)
    if method == PeriodicMethod.ALL:
        methods = available
    elif method in available:
        methods = [method]
    else:
        raise HypothesisError(f"method {method.value} is unavailable for {kind.label()}; "
                              f"available: {', '.join(m.value for m in available)}")

    values: dict[str, int] = {}
    verbatim = None
    for m in methods:
        if m == PeriodicMethod.CLASS:
            values[m.value] = exact_periodic_count(family, n, q, L, jobs=config.jobs)
        elif m == PeriodicMethod.CLOSED:
            values[m.value] = closed_count(family, n, q, L)
            if config.paper_verbatim and family == GroupFamily.M and n == 3:
                verbatim = closed_count(family, n, q, L, verbatim=True)
        else:
            values[m.value] = brute_periodic_count(
                kind, L, config.jobs,
                filter_guard=config.guard_or(GROUP_FILTER_GUARD),
                closure_guard=config.guard_or(GROUP_CLOSURE_GUARD))

    distinct = set(values.values())
    agree = len(distinct) == 1
    if not agree:
        logger.warning("periodic counts of %s disagree: %s", kind.label(), values)
    count = next(iter(distinct)) if agree else None
    order = group_order(kind)
    return PeriodicReport(
        params={"family": family.value, **params.as_dict()},
        values={key: str(v) for key, v in values.items()},
        count=exact(count),
        order=exact(order),
        ratio=exact(Fraction(count, order)) if agree else None,
        agree=agree,
        paper_verbatim=exact(verbatim),
    )


# ------------------------------
# limit
# ------------------------------

def limit_value(family: GroupFamily, ell: int, L: int, c: int, verbatim: bool = False) -> Fraction:
    if family in (GroupFamily.M, GroupFamily.GL):
        return limit_gl(ell, L, c)
    return limit_sp_u(ell, L, c, verbatim=verbatim)


def finite_ratio(family: GroupFamily, ell: int, q: int, L: int, config: RunConfig) -> Fraction:
    """
    Proportion of periodic points at a concrete q: class counts for M / GL, brute force for
    Sp_2ell(q) and U_ell(q)
    """
    if family in (GroupFamily.M, GroupFamily.GL):
        kind = GroupKind(family, ell, q)
        return Fraction(exact_periodic_count(family, ell, q, L, jobs=config.jobs),
                        group_order(kind))
    kind = GroupKind(family, 2 * ell if family == GroupFamily.SP else ell, q)
    count = brute_periodic_count(kind, L, config.jobs,
                                 filter_guard=config.guard_or(GROUP_FILTER_GUARD),
                                 closure_guard=config.guard_or(GROUP_CLOSURE_GUARD))
    return Fraction(count, group_order(kind))


def cmd_limit(family: GroupFamily, ell: int, L: int, c: int, q: int | None,
              config: RunConfig) -> LimitReport:
    """
    Limiting proportion of periodic points, optionally with the ratio at a concrete q

    For U_1(q) the finite ratio is 1 for every q while the shared Sp / U limit is reported.

    :raises HypothesisError: L = 2, c < 1, or q with v_L(q - 1) != c
    """
    if ell < 1:
        raise HypothesisError(f"ell must be >= 1, got {ell}")
    value = limit_value(family, ell, L, c)
    if family == GroupFamily.U and ell == 1:
        logger.warning("U_1(q) is cyclic of order q + 1, prime to L, so every element is periodic; "
                       "the shared Sp / U limit describes U_ell(q) from ell = 2 on")
    params: dict[str, object] = {"family": family.value, "ell": ell, "L": L, "c": c}
    ratio = gap = None
    if q is not None:
        CountParams(q, L, c=c)
        params["q"] = q
        ratio = finite_ratio(family, ell, q, L, config)
        gap = abs(ratio - value)
    verbatim = None
    if config.paper_verbatim and family in (GroupFamily.SP, GroupFamily.U):
        verbatim = limit_value(family, ell, L, c, verbatim=True)
    return LimitReport(params=params, value=str(value), numerator=str(value.numerator),
                       denominator=str(value.denominator), finite_ratio=exact(ratio),
                       gap=exact(gap), paper_verbatim=exact(verbatim))


# ------------------------------
# sweeps
# ------------------------------

def parse_sweep(spec: str) -> list[int]:
    """
    Prime powers in the inclusive range of "q=a..b"

    :raises HypothesisError: malformed range
    """
    match = re.match(SWEEP_PATTERN, spec)
    if match is None:
        raise HypothesisError(f"sweep must look like q=3..31, got {spec!r}")
    lo, hi = int(match.group(1)), int(match.group(2))
    if lo > hi:
        raise HypothesisError(f"empty sweep range {spec!r}")
    qs = []
    for q in range(max(lo, 2), hi + 1):
        try:
            prime_power(q)
        except HypothesisError:
            continue
        qs.append(q)
    return qs


def sweep(command: Callable[[int], Report], qs: list[int], name: str) -> SweepReport:
    """
    Runs command(q) for every q; values of q violating a hypothesis are listed as skipped
    """
    rows, skipped, agree = [], [], True
    for q in qs:
        try:
            report = command(q)
        except HypothesisError as e:
            logger.info("sweep %s skips q=%d: %s", name, q, e)
            skipped.append(str(q))
            continue
        rows.extend(report.table())
        agree = agree and report.exit_code() == 0
    return SweepReport(params={"command": name, "qs": f"{qs[0]}..{qs[-1]}" if qs else ""},
                       rows=rows, skipped=skipped, agree=agree)
