"""
Tests of the command implementations, report rendering and the argument parser.
"""

import json
from fractions import Fraction

import pytest
from pydantic import ValidationError

from main import build_parser, dispatch
from src.cli.commands import closed_count, cmd_count_irr, cmd_limit, cmd_periodic, parse_sweep, \
    sweep
from src.cli.config import RunConfig
from src.cli.output import render
from src.cli.verify import Verifier, cmd_verify
from src.constants import CountKind, CountMethod, ExitCode, GroupFamily, OutputFormat, \
    PeriodicMethod, VERSION, VerifySuite
from src.errors import HypothesisError, VerificationMismatch

CONFIG = RunConfig()

# (kind, q, L, n, count, printed)
COUNT_CASES: list[tuple[CountKind, int, int, int, str, str | None]] = [
    (CountKind.PLAIN, 7, 3, 2, "7", None),
    (CountKind.SELF_RECIPROCAL, 7, 3, 1, "3", "4"),
    (CountKind.SELF_CONJUGATE, 4, 3, 2, "0", "6"),
]


def test_count_irr() -> None:
    for kind, q, L, n, count, printed in COUNT_CASES:
        report = cmd_count_irr(kind, q, L, n, CountMethod.BOTH, CONFIG)
        assert report.formula == count
        assert report.oracle == count
        assert report.agree is True
        assert report.paper_verbatim == printed
        assert report.exit_code() == ExitCode.OK

    report = cmd_count_irr(CountKind.PLAIN, 59, 2, 1, CountMethod.FORMULA, CONFIG)
    assert report.formula == "29"
    assert report.oracle is None
    assert report.agree is None
    assert report.params == {"kind": "plain", "q": "59", "L": "2", "n": "1", "c": "1"}

    with pytest.raises(HypothesisError):
        cmd_count_irr(CountKind.PLAIN, 4, 2, 1, CountMethod.FORMULA, CONFIG)


def test_periodic() -> None:
    report = cmd_periodic(GroupFamily.M, 2, 3, 2, PeriodicMethod.ALL, CONFIG)
    assert report.values == {"class": "22", "closed": "22", "brute": "22"}
    assert report.count == "22"
    assert report.ratio == "22/81"
    assert report.agree

    report = cmd_periodic(GroupFamily.GL, 1, 7, 3, PeriodicMethod.ALL, CONFIG)
    assert report.count == "2"
    assert report.order == "6"

    report = cmd_periodic(GroupFamily.SP, 2, 5, 3, PeriodicMethod.BRUTE, CONFIG)
    assert report.values == {"brute": "80"}
    assert report.ratio == "2/3"

    with pytest.raises(HypothesisError):
        cmd_periodic(GroupFamily.SP, 2, 3, 2, PeriodicMethod.CLASS, CONFIG)
    with pytest.raises(HypothesisError):
        cmd_periodic(GroupFamily.GL, 2, 3, 2, PeriodicMethod.CLOSED, CONFIG)


def test_periodic_verbatim_row() -> None:
    config = RunConfig(paper_verbatim=True)
    report = cmd_periodic(GroupFamily.M, 3, 7, 3, PeriodicMethod.CLOSED, config)
    assert report.paper_verbatim is not None
    assert report.paper_verbatim != report.count


def test_closed_count() -> None:
    assert closed_count(GroupFamily.M, 1, 7, 3) == 3
    assert closed_count(GroupFamily.GL, 1, 59, 2) == 29
    assert closed_count(GroupFamily.M, 2, 13, 3) == 6553
    with pytest.raises(HypothesisError):
        closed_count(GroupFamily.GL, 2, 7, 3)


def test_limit() -> None:
    report = cmd_limit(GroupFamily.GL, 2, 3, 1, None, CONFIG)
    assert report.value == "2/9"
    assert (report.numerator, report.denominator) == ("2", "9")
    assert report.finite_ratio is None

    report = cmd_limit(GroupFamily.GL, 2, 3, 1, 13, CONFIG)
    assert report.finite_ratio == "2/9"
    assert report.gap == "0"

    assert cmd_limit(GroupFamily.SP, 1, 3, 1, None, CONFIG).value == "2/3"
    assert cmd_limit(GroupFamily.U, 1, 3, 1, None, CONFIG).value == "2/3"
    unitary = cmd_limit(GroupFamily.U, 1, 3, 1, 13, CONFIG)
    assert (unitary.finite_ratio, unitary.gap) == ("1", "1/3")
    verbatim = cmd_limit(GroupFamily.SP, 1, 3, 1, None, RunConfig(paper_verbatim=True))
    assert verbatim.paper_verbatim == "4/3"

    with pytest.raises(HypothesisError):
        cmd_limit(GroupFamily.GL, 2, 2, 1, None, CONFIG)
    with pytest.raises(HypothesisError):
        cmd_limit(GroupFamily.GL, 2, 3, 2, 13, CONFIG)


def test_sweep() -> None:
    assert parse_sweep("q=3..9") == [3, 4, 5, 7, 8, 9]
    assert parse_sweep("q=1..3") == [2, 3]
    for bad in ("3..9", "q=9..3", "q=a..b"):
        with pytest.raises(HypothesisError):
            parse_sweep(bad)

    report = sweep(lambda q: cmd_count_irr(CountKind.PLAIN, q, 3, 1, CountMethod.BOTH, CONFIG),
                   parse_sweep("q=3..9"), "count-irr")
    assert [row["q"] for row in report.rows] == ["4", "7"]
    assert report.skipped == ["3", "5", "8", "9"]
    assert report.agree


def test_render() -> None:
    report = cmd_limit(GroupFamily.GL, 2, 3, 1, None, CONFIG)

    data = json.loads(render(report, OutputFormat.JSON))
    assert data["version"] == VERSION
    assert data["value"] == "2/9"
    assert data["params"]["ell"] == "2"

    lines = render(report, OutputFormat.CSV).split("\n")
    assert lines[0] == "family,ell,L,c,value"
    assert lines[1] == "gl,2,3,1,2/9"

    text = render(report, OutputFormat.TEXT)
    assert text.startswith(f"{VERSION} limit")
    assert "2/9" in text


def test_run_config() -> None:
    with pytest.raises(ValidationError):
        RunConfig(jobs=0)
    with pytest.raises(ValidationError):
        RunConfig(guard=0)
    assert RunConfig(guard=10).guard_or(100) == 10
    assert RunConfig().guard_or(100) == 100


def test_verify_is_deterministic() -> None:
    first = cmd_verify(VerifySuite.LIMITS, 1000)
    second = cmd_verify(VerifySuite.LIMITS, 1000, jobs=2)
    assert first.passed
    assert render(first, OutputFormat.JSON) == render(second, OutputFormat.JSON)
    statuses = {c.name: c.status for c in first.checks}
    assert statuses["convergence-sp"] == "skipped"
    assert statuses["convergence-m"] == "pass"


def test_verify_dynamics() -> None:
    report = cmd_verify(VerifySuite.DYNAMICS, 100)
    assert report.passed
    assert report.exit_code() == ExitCode.OK
    assert any(c.name == "cycle-example" and c.status == "pass" for c in report.checks)


def test_dispatch(capsys) -> None:
    args = build_parser().parse_args(["limit", "--family", "gl", "--ell", "2", "--L", "3",
                                      "--c", "1"])
    assert dispatch(args) == ExitCode.OK
    assert json.loads(capsys.readouterr().out)["value"] == "2/9"

    args = build_parser().parse_args(["periodic", "--family", "m", "--n", "2", "--L", "2",
                                      "--sweep", "q=3..5", "--format", "csv"])
    assert dispatch(args) == ExitCode.OK
    out = capsys.readouterr().out.strip().split("\n")
    assert len(out) == 3

    args = build_parser().parse_args(["periodic", "--family", "m", "--n", "2", "--L", "2"])
    with pytest.raises(HypothesisError):
        dispatch(args)


def test_verifier_records_raising_checks() -> None:
    """
    A check whose computation raises is reported as a failure and later checks still run
    """
    def mismatch() -> tuple[object, object]:
        raise VerificationMismatch("closure order", 48, 24)

    def division() -> tuple[object, object]:
        return 1, Fraction(1, 0)

    v = Verifier(budget=100)
    v.run("raises", {"q": 3}, 1, mismatch)
    v.run("divides", {"q": 3}, 1, division)
    v.run("holds", {"q": 3}, 1, lambda: (2, 2))
    v.run("too-big", {"q": 3}, 1000, mismatch)

    statuses = {c.name: c.status for c in v.checks}
    assert statuses == {"raises": "fail", "divides": "fail", "holds": "pass",
                        "too-big": "skipped"}
    assert v.checks[0].got.startswith("VerificationMismatch: closure order")
    assert v.checks[1].got.startswith("ZeroDivisionError")
    assert not v.passed
