"""
Prints finite-q proportions of periodic points next to their limits.

Usage: python main.py script convergence_table [L] [q ...]
Defaults: L = 3 and the convergence grid of src.constants.
"""

from fractions import Fraction

from tabulate import tabulate

from src.classes.exact_count import periodic_ratio
from src.classes.limits import limit_gl, limit_sp_u
from src.constants import GroupFamily, VERIFY_CONVERGENCE_QS
from src.counting.valuation import CountParams
from src.errors import HypothesisError
from src.groups.brute import brute_periodic_count
from src.groups.kinds import GroupKind, group_order


def rows_for(L: int, qs: list[int]) -> list[dict[str, str]]:
    """
    One row per (family, q): exact ratio, its limit for c = v_L(q - 1), and the gap
    """
    rows = []
    for q in qs:
        try:
            c = CountParams(q, L).require_delta_divides_d().require_l_divides_q_minus_1().c
        except HypothesisError as e:
            print(f'skipping q={q}: {e}')
            continue
        for family in (GroupFamily.GL, GroupFamily.M):
            for ell in (1, 2, 3):
                ratio = periodic_ratio(family, ell, q, L)
                limit = limit_gl(ell, L, c)
                rows.append(_row(family.value, ell, q, c, ratio, limit))
        kind = GroupKind(GroupFamily.SP, 2, q)
        ratio = Fraction(brute_periodic_count(kind, L), group_order(kind))
        rows.append(_row("sp", 1, q, c, ratio, limit_sp_u(1, L, c)))
    return rows


def _row(family: str, ell: int, q: int, c: int, ratio: Fraction, limit: Fraction) -> dict[str, str]:
    return {"family": family, "ell": str(ell), "q": str(q), "c": str(c), "ratio": str(ratio),
            "limit": str(limit), "gap": f"{float(abs(ratio - limit)):.3e}"}


def main(args: list[str]) -> None:
    """
    Script entry point
    """
    L = int(args[0]) if args else 3
    qs = [int(a) for a in args[1:]] or VERIFY_CONVERGENCE_QS
    print(tabulate(rows_for(L, qs), headers="keys", tablefmt="github"))
