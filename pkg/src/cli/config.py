"""
Run configuration and report models.

Every big integer and rational is stored as a decimal string so that JSON reports never
truncate to 64 bits; Fractions serialise as "p/q".
"""

from fractions import Fraction

from pydantic import BaseModel, Field, field_validator

from src.constants import ExitCode, OutputFormat, VERSION


def exact(value: int | Fraction | None) -> str | None:
    """
    Decimal string of an exact integer or rational
    """
    return None if value is None else str(value)


class RunConfig(BaseModel):
    """
    Flags shared by every subcommand, validated before any computation

    Attributes
    ----------
    fmt: :class:`OutputFormat`
        Report format.
    jobs: :class:`int`
        Worker processes.
    guard: :class:`int | None`
        Override of the enumeration guards.
    paper_verbatim: :class:`bool`
        Also report the uncorrected printed formulas.
    """
    fmt: OutputFormat = OutputFormat.JSON
    jobs: int = Field(default=1, ge=1)
    guard: int | None = Field(default=None, ge=1)
    paper_verbatim: bool = False

    def guard_or(self, default: int) -> int:
        return default if self.guard is None else self.guard


class Report(BaseModel):
    """
    Base of every report: version and full parameter echo
    """
    version: str = VERSION
    command: str
    params: dict[str, str]

    @field_validator("params", mode="before")
    @classmethod
    def stringify(cls, value: dict) -> dict[str, str]:
        return {key: str(v) for key, v in value.items()}

    def table(self) -> list[dict[str, str]]:
        """
        Rows used by the csv and text emitters
        """
        return [dict(self.params)]

    def exit_code(self) -> ExitCode:
        return ExitCode.OK


class CountIrrReport(Report):
    command: str = "count-irr"
    method: str
    formula: str | None = None
    oracle: str | None = None
    agree: bool | None = None
    paper_verbatim: str | None = None

    def table(self) -> list[dict[str, str]]:
        row = dict(self.params, method=self.method)
        for key in ("formula", "oracle", "agree", "paper_verbatim"):
            if getattr(self, key) is not None:
                row[key] = str(getattr(self, key))
        return [row]

    def exit_code(self) -> ExitCode:
        return ExitCode.MISMATCH if self.agree is False else ExitCode.OK


class PeriodicReport(Report):
    command: str = "periodic"
    values: dict[str, str]
    count: str | None = None
    order: str | None = None
    ratio: str | None = None
    agree: bool = True
    paper_verbatim: str | None = None

    def table(self) -> list[dict[str, str]]:
        row = dict(self.params, **self.values)
        for key in ("count", "order", "ratio", "paper_verbatim"):
            if getattr(self, key) is not None:
                row[key] = str(getattr(self, key))
        return [row]

    def exit_code(self) -> ExitCode:
        return ExitCode.OK if self.agree else ExitCode.MISMATCH


class LimitReport(Report):
    command: str = "limit"
    value: str
    numerator: str
    denominator: str
    finite_ratio: str | None = None
    gap: str | None = None
    paper_verbatim: str | None = None

    def table(self) -> list[dict[str, str]]:
        row = dict(self.params, value=self.value)
        for key in ("finite_ratio", "gap", "paper_verbatim"):
            if getattr(self, key) is not None:
                row[key] = str(getattr(self, key))
        return [row]


class CheckResult(BaseModel):
    """
    Outcome of one verification check

    Attributes
    ----------
    name: :class:`str`
    params: :class:`dict[str, str]`
    expected: :class:`str`
    got: :class:`str`
    status: :class:`str`
        "pass", "fail" or "skipped".
    """
    name: str
    params: dict[str, str]
    expected: str
    got: str
    status: str


class VerifyReport(Report):
    command: str = "verify"
    checks: list[CheckResult] = []
    passed: bool = True

    def table(self) -> list[dict[str, str]]:
        return [{"name": c.name, **c.params, "expected": c.expected, "got": c.got,
                 "status": c.status} for c in self.checks]

    def exit_code(self) -> ExitCode:
        return ExitCode.OK if self.passed else ExitCode.MISMATCH


class SweepReport(Report):
    command: str = "sweep"
    rows: list[dict[str, str]] = []
    skipped: list[str] = []
    agree: bool = True

    def table(self) -> list[dict[str, str]]:
        return self.rows

    def exit_code(self) -> ExitCode:
        return ExitCode.OK if self.agree else ExitCode.MISMATCH
