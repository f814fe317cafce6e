"""
Orbit iteration of the power map x -> x^L with memoised states.
"""

from collections.abc import Callable, Hashable
from dataclasses import dataclass
from typing import TypeVar

from src.algebra.field import FieldElem, elem_pow
from src.algebra.matrix import Matrix, mat_power
from src.constants import ORBIT_MEMO_BUDGET
from src.errors import GuardExceededError

T = TypeVar("T")


@dataclass(frozen=True)
class OrbitReport:
    """
    Shape of the orbit of a point under a self-map

    Attributes
    ----------
    preperiod: :class:`int`
        Number of steps before the orbit enters its cycle.
    period: :class:`int`
        Length of the cycle.
    """
    preperiod: int
    period: int

    @property
    def periodic(self) -> bool:
        return self.preperiod == 0


def follow_orbit(start: T, step: Callable[[T], T], key: Callable[[T], Hashable],
                 budget: int = ORBIT_MEMO_BUDGET) -> OrbitReport:
    """
    Iterates step from start until a state repeats

    :param start: Initial state
    :param step: The self-map
    :param key: Canonical hash key of a state
    :param budget: Maximum number of remembered states
    :raises GuardExceededError: orbit longer than budget
    """
    seen: dict[Hashable, int] = {key(start): 0}
    state = start
    steps = 0
    while True:
        state = step(state)
        steps += 1
        k = key(state)
        if k in seen:
            return OrbitReport(preperiod=seen[k], period=steps - seen[k])
        if len(seen) >= budget:
            raise GuardExceededError("orbit memo", len(seen) + 1, budget)
        seen[k] = steps


def orbit_report(a: Matrix, L: int, budget: int = ORBIT_MEMO_BUDGET) -> OrbitReport:
    """
    Preperiod and period of A under X -> X^L
    """
    if L < 2:
        raise ValueError(f"power map exponent must be >= 2, got {L}")
    return follow_orbit(a, lambda x: mat_power(x, L), Matrix.key, budget)


def field_orbit_report(x: FieldElem, L: int, budget: int = ORBIT_MEMO_BUDGET) -> OrbitReport:
    """
    Preperiod and period of a field element under x -> x^L
    """
    return follow_orbit(x, lambda y: elem_pow(y, L), lambda y: y.coeffs, budget)
