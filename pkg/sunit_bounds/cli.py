"""
Command Line Interface
======================

Defines the ``sunit-bounds`` command line interface:

-   :class:`sunit_bounds.cli.RunReport`
-   :attr:`sunit_bounds.cli.CHECKS_VERIFY`
-   :func:`sunit_bounds.cli.cmd_verify`
-   :func:`sunit_bounds.cli.cmd_table`
-   :func:`sunit_bounds.cli.cmd_bound`
-   :func:`sunit_bounds.cli.main`

Reports are written as *JSON* on *stdout*, banners and warnings on *stderr*.
The exit code is 0 on success, 1 when a check fails and 2 on a usage or
parameter validation error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass, field
from functools import partial

from colour.hints import Any, Callable, Dict, List, Sequence, Tuple
from colour.utilities import message_box

from sunit_bounds.analytic_bounds import (
    check_length_bounds,
    check_mahler_sandwich,
    sample_archimedean_bounds,
)
from sunit_bounds.common import (
    DEFAULT_SEED,
    BoundViolation,
    ComparisonFailure,
    IdentityViolation,
    RootFindingFailure,
    SUnitBoundsError,
    format_rational,
    to_serialisable,
)
from sunit_bounds.evertse_pipeline import (
    EvertseParams,
    assemble_bound,
    min_k,
    part_sizes,
    reproduce_choice,
)
from sunit_bounds.exact_arith import ONE_THIRD, gen_binomial
from sunit_bounds.optimizer import (
    compare_evertse,
    grid_search,
    load_search_spec,
    pareto_front,
    theorem_form_check,
)
from sunit_bounds.pade_construct import (
    build,
    integral_scaling,
    verify_combinatorial_identity,
    verify_cubic_substitution,
    verify_determinant_nonvanishing,
    verify_divisibility,
    verify_order_condition,
    verify_remainder_forms,
    verify_wronskian,
)

__author__ = "S-Unit Bounds Developers"
__copyright__ = "Copyright 2024 S-Unit Bounds Developers"
__license__ = "BSD-3-Clause - https://opensource.org/licenses/BSD-3-Clause"
__maintainer__ = "S-Unit Bounds Developers"
__email__ = "sunit-bounds-developers@googlegroups.com"
__status__ = "Production"

__all__ = [
    "EXIT_SUCCESS",
    "EXIT_CHECK_FAILURE",
    "EXIT_USAGE_ERROR",
    "RunReport",
    "CHECKS_VERIFY",
    "CHECKS_VERIFY_RANGE",
    "cmd_verify",
    "cmd_table",
    "cmd_bound",
    "main",
]

EXIT_SUCCESS: int = 0
"""Exit code when every check passes."""

EXIT_CHECK_FAILURE: int = 1
"""Exit code when a check fails."""

EXIT_USAGE_ERROR: int = 2
"""Exit code of usage and parameter validation errors."""

_print_stderr: Callable = partial(print, file=sys.stderr)

_CHECK_FAILURES: Tuple = (
    BoundViolation,
    ComparisonFailure,
    IdentityViolation,
    RootFindingFailure,
)


@dataclass
class RunReport:
    """
    Define the machine readable report of a command.

    Parameters
    ----------
    command
        Command name.
    parameters
        Echo of the command inputs.
    results
        Command specific payload.
    checks_passed
        Number of passed checks.
    checks_failed
        Number of failed checks.
    wall_time_ms
        Wall time in milliseconds.
    """

    command: str
    parameters: Dict[str, Any] = field(default_factory=dict)
    results: Any = field(default_factory=dict)
    checks_passed: int = 0
    checks_failed: int = 0
    wall_time_ms: int = 0

    def record(self, passed: bool) -> None:
        """Count a check outcome."""

        if passed:
            self.checks_passed += 1
        else:
            self.checks_failed += 1

    @property
    def exit_code(self) -> int:
        """Return the process exit code of the report."""

        return EXIT_SUCCESS if self.checks_failed == 0 else EXIT_CHECK_FAILURE


def _check_order(n: int, options: argparse.Namespace) -> bool:
    return verify_order_condition(n, options.extra_terms)


def _check_ab_forms(n: int, options: argparse.Namespace) -> bool:
    pair = build(n)

    values_at_one = n == 0 or (
        pair.A(1) == gen_binomial(2 * n - 1, n - 1)
        and pair.B(1) == gen_binomial(2 * n - 1, n)
    )

    return (
        values_at_one
        and integral_scaling(n)
        and verify_remainder_forms(n, options.extra_terms)
    )


def _check_divisibility(n: int, options: argparse.Namespace) -> bool:
    if n == 0:
        return True

    passed = verify_divisibility(n)
    if n == 1:
        coefficients = [abs(c) for c in build(1).W.coefficients]
        passed = passed and coefficients == [1, 2 * ONE_THIRD, ONE_THIRD]

    return passed


def _check_wronskian(n: int, options: argparse.Namespace) -> bool:
    passed, _constant = verify_wronskian(n)

    return passed and verify_determinant_nonvanishing(n, seed=options.seed)


def _check_identities(n: int, options: argparse.Namespace) -> bool:
    if n == 0:
        return True

    omegas = (ONE_THIRD, 3)

    return all(
        verify_combinatorial_identity("i", n, ell, omega)
        for omega in omegas
        for ell in range(n + 1)
    ) and all(
        verify_combinatorial_identity("ii", n, ell, omega)
        for omega in omegas
        for ell in range(n)
    ) and all(verify_combinatorial_identity("iii", n, 0, omega) for omega in omegas)


def _check_substitution(n: int, options: argparse.Namespace) -> bool:
    return verify_cubic_substitution(n, 3 * n + 8)


def _check_sampling(n: int, options: argparse.Namespace) -> bool:
    if n == 0:
        return True

    # Violations raise "BoundViolation" with the witness point.
    sample_archimedean_bounds(n, options.samples, options.seed)

    return True


CHECKS_VERIFY: Dict[str, Callable] = {
    "order": _check_order,
    "ab_forms": _check_ab_forms,
    "divisibility": _check_divisibility,
    "wronskian": _check_wronskian,
    "identities": _check_identities,
    "substitution": _check_substitution,
    "lengths": check_length_bounds,
    "mahler": check_mahler_sandwich,
    "sampling": _check_sampling,
}
"""
Verification suites of the ``verify`` command, keys of
:attr:`sunit_bounds.cli.CHECKS_VERIFY_RANGE` run once over the whole degree
range, the others once per degree.
"""

CHECKS_VERIFY_RANGE: Tuple[str, ...] = ("lengths", "mahler")
"""Verification suites taking the maximum degree."""


def _parse_checks(value: str) -> List[str]:
    checks = [check.strip() for check in value.split(",") if check.strip()]

    unknown = [check for check in checks if check not in CHECKS_VERIFY]
    if unknown or not checks:
        raise argparse.ArgumentTypeError(
            f"unknown checks {unknown}, choose from {', '.join(CHECKS_VERIFY)}"
        )

    return checks


def cmd_verify(options: argparse.Namespace) -> RunReport:
    """
    Run the selected verification suites for :math:`n \\leq max_n`.

    Parameters
    ----------
    options
        Parsed arguments with ``max_n``, ``checks``, ``extra_terms``,
        ``samples`` and ``seed`` attributes.

    Returns
    -------
    :class:`sunit_bounds.cli.RunReport`
        Run report.
    """

    report = RunReport(
        "verify",
        {
            "max_n": options.max_n,
            "checks": options.checks,
            "extra_terms": options.extra_terms,
            "samples": options.samples,
            "seed": options.seed,
        },
    )

    for check in options.checks:
        message_box(
            f'Running "{check}" verification suite...', print_callable=_print_stderr
        )

        outcome: Dict[str, Any] = {}

        if check in CHECKS_VERIFY_RANGE:
            try:
                outcome["report"] = CHECKS_VERIFY[check](options.max_n)
                report.record(outcome["report"].passed)
            except _CHECK_FAILURES as error:
                outcome["error"] = str(error)
                outcome["witness"] = getattr(error, "witness", None)
                report.record(False)

            report.results[check] = outcome
            continue

        failed: List[int] = []
        for n in range(0, options.max_n + 1):
            try:
                passed = CHECKS_VERIFY[check](n, options)
            except _CHECK_FAILURES as error:
                outcome.setdefault("errors", {})[str(n)] = str(error)
                passed = False

            report.record(passed)
            if not passed:
                failed.append(n)

        outcome["failed"] = failed
        report.results[check] = outcome

    return report


def cmd_table(n: int, format: str = "json") -> str:  # noqa: A002
    """
    Return the exact coefficients of
    :math:`P_{n,0}, P_{n,1}, A_n, B_n, V_n, W_n` as ``"p/q"`` strings.

    Parameters
    ----------
    n
        Approximation degree.
    format
        ``"json"`` or ``"csv"``.

    Examples
    --------
    >>> print(cmd_table(1, "csv"))  # doctest: +NORMALIZE_WHITESPACE
    polynomial,c0,c1,c2,c3,c4
    P0,1/3,1,,,
    P1,1,,,,
    A,1,,,,
    B,4/3,-1/3,,,
    V,1,-4/3,0,0,1/3
    W,1,2/3,1/3,,
    """

    pair = build(n)

    polynomials = {
        name: [format_rational(c) for c in getattr(pair, name).coefficients]
        for name in ("P0", "P1", "A", "B", "V", "W")
    }

    if format == "json":
        return json.dumps({"n": n, **polynomials}, indent=2)

    width = max(len(coefficients) for coefficients in polynomials.values())

    stream = io.StringIO()
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(["polynomial"] + [f"c{i}" for i in range(width)])
    for name, coefficients in polynomials.items():
        writer.writerow([name] + coefficients + [""] * (width - len(coefficients)))

    return stream.getvalue().rstrip("\n")


def _bound_eval(options: argparse.Namespace, report: RunReport) -> None:
    k = options.k if options.k is not None else min_k(options.B, options.r0)
    params = EvertseParams(
        B=options.B,
        r0=options.r0,
        k=k,
        ln2C=options.ln2C,
        n_step4=options.n,
        m=options.m,
        s=options.s,
    )
    report.parameters.update(to_serialisable(params))
    report.parameters["logA"] = options.logA

    breakdown = assemble_bound(params, options.logA)
    ln_fpart, ln_gpart = part_sizes(breakdown, breakdown.logA)

    report.results = {
        "breakdown": breakdown,
        "ln_fpart": ln_fpart,
        "ln_gpart": ln_gpart,
    }
    report.record(True)


def _bound_reproduce(options: argparse.Namespace, report: RunReport) -> None:
    reproduction = reproduce_choice(options.choice)
    report.parameters["choice"] = options.choice

    for match in reproduction.matches:
        report.record(match.matched)
        if not match.matched:
            _print_stderr(
                f'"{match.name}" = {match.computed} does not match the printed '
                f'"{match.printed}"!'
            )

    report.results = reproduction


def _bound_optimize(options: argparse.Namespace, report: RunReport) -> None:
    spec = load_search_spec(options.config)
    report.parameters.update(to_serialisable(spec))

    breakdowns = grid_search(spec)
    report.results = {"ranked": breakdowns}
    if options.pareto:
        report.results["pareto_front"] = pareto_front(breakdowns)

    report.record(True)


def _bound_compare_evertse(options: argparse.Namespace, report: RunReport) -> None:
    report.parameters.update({"m_max": options.m_max, "s_max": options.s_max})

    try:
        report.results = compare_evertse(options.m_max, options.s_max)
        report.record(True)
    except ComparisonFailure as error:
        report.results = {"error": str(error), "witness": error.witness}
        report.record(False)


def _bound_theorem_check(options: argparse.Namespace, report: RunReport) -> None:
    report.parameters.update(
        {
            "m_max": options.m_max,
            "s_max": options.s_max,
            "coeff_small": options.coeff_small,
            "base_m": options.base_m,
            "base_s": options.base_s,
        }
    )

    try:
        report.results = theorem_form_check(
            options.m_max,
            options.s_max,
            options.coeff_small,
            options.base_m,
            options.base_s,
        )
        report.record(True)
    except ComparisonFailure as error:
        report.results = {"error": str(error), "witness": error.witness}
        report.record(False)


_BOUND_SUBCOMMANDS: Dict[str, Callable] = {
    "eval": _bound_eval,
    "reproduce": _bound_reproduce,
    "optimize": _bound_optimize,
    "compare-evertse": _bound_compare_evertse,
    "theorem-check": _bound_theorem_check,
}


def cmd_bound(options: argparse.Namespace) -> RunReport:
    """
    Run a ``bound`` sub-command.

    Parameters
    ----------
    options
        Parsed arguments with a ``bound_command`` attribute naming the
        sub-command and its own arguments.

    Returns
    -------
    :class:`sunit_bounds.cli.RunReport`
        Run report.
    """

    report = RunReport(f"bound {options.bound_command}")

    message_box(
        f'Running "bound {options.bound_command}"...', print_callable=_print_stderr
    )
    _BOUND_SUBCOMMANDS[options.bound_command](options, report)

    return report


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sunit-bounds",
        description="Verify the Padé approximants of (1 - z)^(1/3) and derive "
        "the S-unit equation counting bound.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    verify = commands.add_parser("verify", help="Run the exact verification suites.")
    verify.add_argument("--max-n", dest="max_n", type=int, default=10)
    verify.add_argument(
        "--checks",
        type=_parse_checks,
        default=list(CHECKS_VERIFY),
        help=f"Comma separated suites among {', '.join(CHECKS_VERIFY)}.",
    )
    verify.add_argument("--extra-terms", dest="extra_terms", type=int, default=20)
    verify.add_argument("--samples", type=int, default=10_000)
    verify.add_argument("--seed", type=int, default=DEFAULT_SEED)

    table = commands.add_parser("table", help="Emit the exact polynomial coefficients.")
    table.add_argument("--n", type=int, required=True)
    table.add_argument("--format", choices=("json", "csv"), default="json")

    bound = commands.add_parser("bound", help="Derive and compare the counting bound.")
    bound_commands = bound.add_subparsers(dest="bound_command", required=True)

    evaluate = bound_commands.add_parser(
        "eval", help="Assemble the bound of given parameters."
    )
    evaluate.add_argument("--B", required=True, help='Exact decimal, e.g. "0.834".')
    evaluate.add_argument("--r0", type=int, required=True)
    evaluate.add_argument(
        "--k", type=int, default=None, help="Default to the minimal k."
    )
    evaluate.add_argument("--ln2C", required=True, help='Exact decimal, e.g. "7.8".')
    evaluate.add_argument("--n", type=int, required=True)
    evaluate.add_argument("--m", type=int, default=1)
    evaluate.add_argument("--s", type=int, default=1)
    evaluate.add_argument("--logA", default="0")

    reproduce = bound_commands.add_parser(
        "reproduce", help="Reproduce a reference parameter choice."
    )
    reproduce.add_argument("--choice", choices=("I", "II"), default="I")

    optimize = bound_commands.add_parser("optimize", help="Search a parameter grid.")
    optimize.add_argument("--config", required=True, help="TOML search specification.")
    optimize.add_argument("--pareto", action="store_true")

    compare = bound_commands.add_parser(
        "compare-evertse", help="Compare with (2 + 5 * 3.26396^m) * 49^s."
    )
    compare.add_argument("--m-max", dest="m_max", type=int, default=10)
    compare.add_argument("--s-max", dest="s_max", type=int, default=10)

    theorem = bound_commands.add_parser(
        "theorem-check", help="Certify (c + 5 * b_m^m) * b_s^s."
    )
    theorem.add_argument("--m-max", dest="m_max", type=int, default=10)
    theorem.add_argument("--s-max", dest="s_max", type=int, default=10)
    theorem.add_argument("--coeff-small", dest="coeff_small", default="3.1")
    theorem.add_argument("--base-m", dest="base_m", default="3.4")
    theorem.add_argument("--base-s", dest="base_s", default="45")

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """
    Run the command line interface.

    Parameters
    ----------
    argv
        Arguments, default to :data:`sys.argv`.

    Returns
    -------
    :class:`int`
        Exit code.
    """

    options = _parser().parse_args(argv)

    start = time.perf_counter()
    try:
        if options.command == "table":
            if options.n < 0:
                _print_stderr(f'"n" must be a natural integer, got {options.n}!')
                return EXIT_USAGE_ERROR

            print(cmd_table(options.n, options.format))
            return EXIT_SUCCESS

        if options.command == "verify":
            if options.max_n < 1:
                _print_stderr(f'"max_n" must be at least 1, got {options.max_n}!')
                return EXIT_USAGE_ERROR

            report = cmd_verify(options)
        else:
            report = cmd_bound(options)
    except _CHECK_FAILURES as error:
        _print_stderr(str(error))
        return EXIT_CHECK_FAILURE
    except (SUnitBoundsError, ValueError, TypeError, OSError) as error:
        _print_stderr(str(error))
        return EXIT_USAGE_ERROR

    report.wall_time_ms = int((time.perf_counter() - start) * 1000)

    print(json.dumps(to_serialisable(report), indent=2))

    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
