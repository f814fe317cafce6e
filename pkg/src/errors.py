"""
Exception hierarchy. Each class carries the exit code main.py reports for it.
"""

from src.constants import ExitCode


class FfdynError(Exception):
    """
    Base of the exceptions raised on purpose by the package
    """

    exit_code: ExitCode = ExitCode.INVALID_PARAMETERS


class HypothesisError(FfdynError, ValueError):
    """
    Raised when parameters violate a hypothesis of the computation requested,
    e.g. L dividing q, L not dividing q - 1, or a non-prime characteristic.
    The message names the violated hypothesis.
    """

    exit_code: ExitCode = ExitCode.INVALID_PARAMETERS


class GuardExceededError(FfdynError, RuntimeError):
    """
    Raised when an enumeration or memo would exceed its configured guard
    """

    exit_code: ExitCode = ExitCode.GUARD_EXCEEDED

    def __init__(self, what: str, size: int, guard: int) -> None:
        super().__init__(f"{what}: size {size} exceeds guard {guard}")
        self.size = size
        self.guard = guard


class VerificationMismatch(FfdynError, AssertionError):
    """
    Raised when two independent evaluations of the same quantity disagree
    """

    exit_code: ExitCode = ExitCode.MISMATCH

    def __init__(self, what: str, expected: object, got: object) -> None:
        super().__init__(f"{what}: expected {expected}, got {got}")
        self.expected = expected
        self.got = got


def check_guard(what: str, size: int, guard: int) -> None:
    """
    Raises GuardExceededError when size > guard

    :param what: Description of the enumeration, used in the message
    :param size: Number of items that would be visited
    :param guard: Configured upper bound
    """
    if size > guard:
        raise GuardExceededError(what, size, guard)
