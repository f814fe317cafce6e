"""
Command-line interface for counting periodic points of the power map x -> x^L over finite
fields, matrix algebras and classical groups, for checking the closed forms against
enumeration, and for running helper scripts and tests.

Usage:
    python main.py count-irr --kind plain --q 7 --L 3 --n 2 --method both
    python main.py periodic --family m --n 2 --q 3 --L 2 --method all
    python main.py limit --family gl --ell 2 --L 3 --c 1 [--q 13]
    python main.py verify --suite all [--budget N]
    python main.py script <script_name> [args...]
    python main.py test <test_name>

    count-irr, periodic and limit accept --sweep q=a..b instead of --q and emit one row per
    prime power in the range (use --format csv for a table).

Common flags:
    --format json|csv|text, --jobs N, --guard N, --paper-verbatim, --log-level LEVEL

Exit codes:
    0 success, 1 verification mismatch, 2 invalid parameters, 3 guard exceeded

Adding new functionality:
    - Add new scripts to SCRIPTS dict with function reference
    - Add new tests to TEST_CASES dict with test function reference
    - Script functions should take no args or single list[str] parameter all
    - Test function should take no args
"""

import argparse
import inspect
import sys
from pathlib import Path
from typing import Callable

import pytest
from pydantic import ValidationError

from src.cli.commands import cmd_count_irr, cmd_limit, cmd_periodic, parse_sweep, sweep
from src.cli.config import Report, RunConfig, SweepReport
from src.cli.output import render
from src.cli.verify import cmd_verify
from src.console import print_error, print_success, print_warning, set_log_level
from src.constants import CountKind, CountMethod, ExitCode, GroupFamily, OutputFormat, \
    PeriodicMethod, VERIFY_DEFAULT_BUDGET, VERSION, VerifySuite
from src.errors import GuardExceededError, HypothesisError, VerificationMismatch
from src.scripts import convergence_table
from src.scripts import discrepancy_report
from src.test import test_classes
from src.test import test_counting
from src.test import test_dynamics


def run_pytest() -> None:
    """
    Runs all pytest test cases in src/test directory.
    """
    test_dir = Path(__file__).parent / 'src' / 'test'
    pytest.main(["-v", str(test_dir)])


SCRIPTS: dict[str, Callable[..., None]] = {
    "convergence_table": convergence_table.main,
    "discrepancy_report": discrepancy_report.main,
}

TEST_CASES: dict[str, Callable[[], None]] = {
    "pytest": run_pytest,
    "cycle_example": test_dynamics.manual_test,
    "lemmas": test_counting.manual_test,
    "classes": test_classes.manual_test,
}


def validate_scripts() -> None:
    """
    Validates function signatures in SCRIPTS dictionary.

    Raises:
        TypeError: If function doesn't match expected signature
    """
    for name, func in SCRIPTS.items():
        signature = inspect.signature(func)
        params = list(signature.parameters.values())
        if not (len(params) == 0 or (len(params) == 1 and params[0].annotation == list[str])):
            raise TypeError(
                f"Function '{name}' must take no arguments or a single argument of type list[str].")


def run_script(script_name: str, args: list[str]) -> ExitCode:
    """
    Executes script with given name and arguments.

    Parameters:
        script_name (str): Name of script from SCRIPTS dictionary
        args (list[str]): List of command line arguments for script

    Returns:
        ExitCode: OK, or INVALID_PARAMETERS for an unknown script
    """
    if script_name not in SCRIPTS:
        print_error(f"Script '{script_name}' not found; available: {', '.join(SCRIPTS)}")
        return ExitCode.INVALID_PARAMETERS
    func = SCRIPTS[script_name]
    if inspect.signature(func).parameters:
        func(args)
    else:
        func()
    return ExitCode.OK


def run_test(test_name: str) -> ExitCode:
    """
    Executes test with given name.

    Parameters:
        test_name (str): Name of test from TEST_CASES dictionary
    """
    if test_name not in TEST_CASES:
        print_error(f"Test '{test_name}' not found; available: {', '.join(TEST_CASES)}")
        return ExitCode.INVALID_PARAMETERS
    TEST_CASES[test_name]()
    return ExitCode.OK


def build_parser() -> argparse.ArgumentParser:
    """
    Builds the argument parser with one subparser per command
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', dest='fmt', choices=[f.value for f in OutputFormat],
                        default=OutputFormat.JSON.value, help='Report format')
    common.add_argument('--jobs', type=int, default=1, help='Worker processes')
    common.add_argument('--guard', type=int, default=None,
                        help='Override of the enumeration guards')
    common.add_argument('--paper-verbatim', action='store_true',
                        help='Also report the uncorrected printed formulas')
    common.add_argument('--log-level', default=None, help='Logging level, e.g. INFO or DEBUG')

    parser = argparse.ArgumentParser(description=f'{VERSION}: periodic points of power maps.')
    parser.add_argument('--version', action='version', version=VERSION)
    sub = parser.add_subparsers(dest='command', required=True)

    count = sub.add_parser('count-irr', parents=[common],
                           help='Count monic irreducibles whose roots satisfy a^e = 1')
    count.add_argument('--kind', choices=[k.value for k in CountKind], required=True)
    count.add_argument('--q', type=int)
    count.add_argument('--L', type=int, required=True)
    count.add_argument('--n', type=int, required=True)
    count.add_argument('--method', choices=[m.value for m in CountMethod],
                       default=CountMethod.FORMULA.value)
    count.add_argument('--sweep', default=None, help='Range of q, e.g. q=3..31')

    periodic = sub.add_parser('periodic', parents=[common],
                              help='Count periodic points of X -> X^L in a matrix group')
    periodic.add_argument('--family', choices=[f.value for f in GroupFamily], required=True)
    periodic.add_argument('--n', type=int, required=True)
    periodic.add_argument('--q', type=int)
    periodic.add_argument('--L', type=int, required=True)
    periodic.add_argument('--method', choices=[m.value for m in PeriodicMethod],
                          default=PeriodicMethod.ALL.value)
    periodic.add_argument('--sweep', default=None, help='Range of q, e.g. q=3..31')

    limit = sub.add_parser('limit', parents=[common],
                           help='Limiting proportion of periodic points')
    limit.add_argument('--family', choices=[f.value for f in GroupFamily], required=True)
    limit.add_argument('--ell', type=int, required=True)
    limit.add_argument('--L', type=int, required=True)
    limit.add_argument('--c', type=int, required=True)
    limit.add_argument('--q', type=int, default=None)
    limit.add_argument('--sweep', default=None, help='Range of q, e.g. q=3..31')

    verify = sub.add_parser('verify', parents=[common], help='Run verification suites')
    verify.add_argument('--suite', choices=[s.value for s in VerifySuite],
                        default=VerifySuite.ALL.value)
    verify.add_argument('--budget', type=int, default=VERIFY_DEFAULT_BUDGET,
                        help='Largest enumeration size a single check may use')

    script = sub.add_parser('script', help='Run a helper script')
    script.add_argument('name')
    script.add_argument('args', nargs='*')

    test = sub.add_parser('test', help='Run pytest or a manual demonstration')
    test.add_argument('name')
    return parser


def _with_q(args: argparse.Namespace, command: Callable[[int], Report], name: str,
            required: bool = True) -> Report:
    if args.sweep is not None:
        if args.q is not None:
            raise HypothesisError("--q and --sweep are mutually exclusive")
        return sweep(command, parse_sweep(args.sweep), name)
    if args.q is None and required:
        raise HypothesisError("--q is required unless --sweep is given")
    return command(args.q)


def dispatch(args: argparse.Namespace) -> ExitCode:
    """
    Runs a parsed command, prints its report to stdout and returns the exit code
    """
    if args.command == 'script':
        return run_script(args.name, args.args)
    if args.command == 'test':
        print_success(f"Running test '{args.name}'...")
        return run_test(args.name)

    if args.log_level:
        set_log_level(args.log_level)
    config = RunConfig(fmt=OutputFormat(args.fmt), jobs=args.jobs, guard=args.guard,
                       paper_verbatim=args.paper_verbatim)

    if args.command == 'count-irr':
        kind, method = CountKind(args.kind), CountMethod(args.method)
        report = _with_q(args, lambda q: cmd_count_irr(kind, q, args.L, args.n, method, config),
                         'count-irr')
    elif args.command == 'periodic':
        family, method = GroupFamily(args.family), PeriodicMethod(args.method)
        report = _with_q(args, lambda q: cmd_periodic(family, args.n, q, args.L, method, config),
                         'periodic')
    elif args.command == 'limit':
        family = GroupFamily(args.family)
        report = _with_q(args, lambda q: cmd_limit(family, args.ell, args.L, args.c, q, config),
                         'limit', required=False)
    else:
        report = cmd_verify(VerifySuite(args.suite), args.budget, config.jobs)

    if isinstance(report, SweepReport) and report.skipped:
        print_warning(f"skipped q = {', '.join(report.skipped)} (hypotheses not met)")
    print(render(report, config.fmt))
    return report.exit_code()


def main() -> None:
    """
    Entry Function
    """
    validate_scripts()
    args = build_parser().parse_args()
    try:
        code = dispatch(args)
    except (HypothesisError, ValidationError) as e:
        print_error(f"Invalid parameters: {e}")
        code = ExitCode.INVALID_PARAMETERS
    except GuardExceededError as e:
        print_error(f"Guard exceeded: {e}")
        code = e.exit_code
    except VerificationMismatch as e:
        print_error(f"Verification mismatch: {e}")
        code = e.exit_code
    # pylint: disable=broad-except
    except Exception as e:
        print_error(f"Error executing command: {str(e)}")
        code = ExitCode.INVALID_PARAMETERS
    sys.exit(int(code))


if __name__ == '__main__':
    main()
