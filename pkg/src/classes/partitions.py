"""
Integer partitions and ordered pairs of partitions.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator

from sympy.utilities.iterables import partitions as sympy_partitions


@dataclass(frozen=True, order=True)
class Partition:
    """
    Partition stored as a descending tuple of positive parts

    Attributes
    ----------
    parts: :class:`tuple[int, ...]`
        Parts in descending order.
    """
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(p < 1 for p in self.parts) or list(self.parts) != sorted(self.parts, reverse=True):
            raise ValueError(f"parts must be positive and descending, got {self.parts}")

    @classmethod
    def from_multiplicities(cls, mult: dict[int, int]) -> Partition:
        return cls(tuple(sorted((part for part, m in mult.items() for _ in range(m)),
                                reverse=True)))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def multiplicities(self) -> dict[int, int]:
        """
        part -> number of times it occurs, ascending by part
        """
        return dict(sorted(Counter(self.parts).items()))

    def __repr__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class SplitPartitionPair:
    """
    Ordered pair of partitions: the self-reciprocal (or self-conjugate) side and the
    paired side, with total size ell

    Attributes
    ----------
    group_plus: :class:`Partition`
    group_minus: :class:`Partition`
    """
    group_plus: Partition
    group_minus: Partition

    @property
    def total(self) -> int:
        return self.group_plus.size + self.group_minus.size


def partitions(ell: int) -> Iterator[Partition]:
    """
    Every partition of ell exactly once (the empty partition for ell = 0)
    """
    if ell < 0:
        raise ValueError(f"cannot partition {ell}")
    if ell == 0:
        yield Partition(())
        return
    for mult in sympy_partitions(ell):
        yield Partition.from_multiplicities(dict(mult))


def split_partitions(ell: int) -> Iterator[SplitPartitionPair]:
    """
    Every ordered pair of partitions with sizes summing to ell exactly once
    """
    for k in range(ell + 1):
        for plus in partitions(k):
            for minus in partitions(ell - k):
                yield SplitPartitionPair(plus, minus)
