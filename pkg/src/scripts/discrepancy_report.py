"""
Lists the places where the printed formulas and the corrected ones differ: the
self-reciprocal count at powers of two, the self-conjugate count at even n, the
diag(alpha, alpha, beta) row of the M_3 table and the Sp / U limit coefficients.
"""

from tabulate import tabulate

from src.classes.exact_count import exact_periodic_count, m3_closed
from src.classes.limits import limit_sp_u
from src.constants import CountKind, GroupFamily
from src.counting.lemmas import d_self_conjugate, d_self_conjugate_verbatim, d_self_reciprocal, \
    d_self_reciprocal_verbatim
from src.counting.oracle import oracle_count

SELF_RECIPROCAL_CASES: list[tuple[int, int, int]] = [(7, 3, 1), (7, 3, 2), (13, 3, 1), (5, 2, 1)]
SELF_CONJUGATE_CASES: list[tuple[int, int, int]] = [(4, 3, 1), (4, 3, 2), (7, 3, 2)]
M3_CASES: list[tuple[int, int]] = [(3, 2), (7, 3), (13, 3)]


def rows() -> list[dict[str, str]]:
    out = []
    for q, L, n in SELF_RECIPROCAL_CASES:
        out.append({"quantity": f"self-reciprocal q={q} L={L} n={n}",
                    "printed": str(d_self_reciprocal_verbatim(q, L, n)),
                    "corrected": str(d_self_reciprocal(q, L, n)),
                    "oracle": str(oracle_count(CountKind.SELF_RECIPROCAL, q, L, n))})
    for q, L, n in SELF_CONJUGATE_CASES:
        out.append({"quantity": f"self-conjugate q={q} L={L} n={n}",
                    "printed": str(d_self_conjugate_verbatim(q, L, n)),
                    "corrected": str(d_self_conjugate(q, L, n)),
                    "oracle": str(oracle_count(CountKind.SELF_CONJUGATE, q, L, n))})
    for q, L in M3_CASES:
        out.append({"quantity": f"M_3 periodic q={q} L={L}",
                    "printed": str(m3_closed(q, L, verbatim=True)),
                    "corrected": str(m3_closed(q, L)),
                    "oracle": str(exact_periodic_count(GroupFamily.M, 3, q, L))})
    for ell in (1, 2):
        out.append({"quantity": f"Sp/U limit ell={ell} L=3 c=1",
                    "printed": str(limit_sp_u(ell, 3, 1, verbatim=True)),
                    "corrected": str(limit_sp_u(ell, 3, 1)),
                    "oracle": ""})
    return out


def main() -> None:
    """
    Script entry point
    """
    print(tabulate(rows(), headers="keys", tablefmt="github"))
