"""
Conjugacy class types of M_n(q) and the orders of their centralizers in GL_n(q).

A class type records, for each elementary divisor block, the degree d of its irreducible
polynomial and the partition giving its Jordan block sizes, plus the multiplicity of the
eigenvalue 0 (whose partition is forced to 1^m0 for periodic matrices).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Iterator

from src.algebra.field import FieldSpec
from src.algebra.matrix import Matrix
from src.algebra.poly import Poly, enumerate_monic_irreducibles
from src.classes.partitions import Partition, partitions
from src.groups.kinds import gl_order


@dataclass(frozen=True)
class ClassType:
    """
    Combinatorial data of a conjugacy class

    Attributes
    ----------
    zero_mult: :class:`int`
        Dimension of the (semisimple) zero eigenspace block.
    blocks: :class:`tuple[tuple[int, Partition], ...]`
        (degree, partition) pairs, one per distinct nonzero irreducible factor, sorted.
    """
    zero_mult: int
    blocks: tuple[tuple[int, Partition], ...]

    @property
    def n(self) -> int:
        return self.zero_mult + sum(d * lam.size for d, lam in self.blocks)

    def is_regular_semisimple(self) -> bool:
        """
        No zero block and every partition equal to (1)
        """
        return self.zero_mult == 0 and all(lam.parts == (1,) for _, lam in self.blocks)

    def nonzero_part(self) -> ClassType:
        return ClassType(0, self.blocks)

    def block_counts(self) -> dict[int, dict[Partition, int]]:
        """
        degree -> (partition -> number of blocks of that degree carrying it)
        """
        out: dict[int, dict[Partition, int]] = {}
        for d, lam in self.blocks:
            out.setdefault(d, {})
            out[d][lam] = out[d].get(lam, 0) + 1
        return out


def _labels(budget: int) -> list[tuple[int, Partition]]:
    return [(d, lam) for d in range(1, budget + 1)
            for size in range(1, budget // d + 1) for lam in partitions(size)]


def class_types(n: int, zero_mult: int = 0) -> Iterator[ClassType]:
    """
    Every class type of dimension n with the given zero multiplicity, each exactly once.
    Blocks are chosen as a multiset over (degree, partition) labels.
    """
    budget = n - zero_mult
    if budget < 0:
        return
    labels = _labels(budget)

    def extend(start: int, remaining: int, chosen: list[tuple[int, Partition]]):
        if remaining == 0:
            yield ClassType(zero_mult, tuple(chosen))
            return
        for i in range(start, len(labels)):
            d, lam = labels[i]
            weight = d * lam.size
            if weight <= remaining:
                chosen.append(labels[i])
                yield from extend(i, remaining - weight, chosen)
                chosen.pop()

    yield from extend(0, budget, [])


def representative(ct: ClassType, field: FieldSpec) -> Matrix | None:
    """
    Block diagonal matrix with companion blocks C(f^k), distinct irreducibles f != t per
    block and a zero block of size zero_mult, or None when F_q has too few irreducibles
    """
    pools: dict[int, list[Poly]] = {}
    parts: list[Matrix] = []
    for d, lam in ct.blocks:
        if d not in pools:
            pools[d] = [f for f in enumerate_monic_irreducibles(field, d)
                        if not f.constant.is_zero()]
        if not pools[d]:
            return None
        f = pools[d].pop(0)
        parts.extend(Matrix.companion(prod([f] * k, start=Poly.one(field))) for k in lam.parts)
    if ct.zero_mult:
        parts.append(Matrix.zero(field, ct.zero_mult))
    return Matrix.block_diagonal(field, parts)


def _block_gamma(d: int, lam: Partition) -> int:
    mult = lam.multiplicities()
    cross = sum(min(a, b) * la * lb for a, la in mult.items() for b, lb in mult.items())
    return d * (cross - sum(l * l for l in mult.values()))


def gl_centralizer_order(ct: ClassType, q: int) -> int:
    """
    |Z_GL(X)| = q^gamma prod |GL_l(q^d)| over blocks and over the multiplicities l of equal
    parts, gamma = sum d (sum_{u,v} min(lam_u, lam_v) l_u l_v - sum_k l_k^2)

    :raises ValueError: zero_mult != 0 (the zero block is accounted for separately)
    """
    if ct.zero_mult != 0:
        raise ValueError("gl_centralizer_order expects a class type without zero block")
    order = 1
    for d, lam in ct.blocks:
        order *= q ** _block_gamma(d, lam)
        for l in lam.multiplicities().values():
            order *= gl_order(l, q ** d)
    return order
