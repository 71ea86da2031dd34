"""Command-line front end.

Three subcommands: ``test`` evaluates the exact coincidence test for
given marginals and an observed incidence, ``discover`` runs concept
enumeration plus significance scoring over a matrix file, and
``verify`` cross-checks the counting formulas against brute-force
enumeration at desk scale.

Exit codes: 0 success, 2 invalid usage or input, 3 a declared budget
was refused.  Reports go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import report
from .core import (
    METHOD_CLOSED_FORM,
    METHOD_PMF_SUMMATION,
    Marginals,
    coincidence_test,
)
from .errors import BudgetError, InvalidInputError
from .fca import DiscoveryFilters, discover
from .ingest import FORMAT_CSV, FORMAT_TSV, parse_path, parse_text, subsample
from .oracle import run_verification

__all__ = ["build_parser", "main", "entrypoint"]

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _parse_v(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise InvalidInputError(
            f"expected comma-separated integers for --v, got {text!r}"
        ) from None


def _parse_threshold(text: str) -> Fraction:
    # accepts decimals ("0.05") and ratios ("1/20")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise InvalidInputError(
            f"expected a probability for --p-threshold, got {text!r}"
        ) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cooccur",
        description="Exact tests and signature discovery for binary matrices.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_test = sub.add_parser(
        "test", help="exact upper-tail test for an observed incidence"
    )
    p_test.add_argument("--n", type=int, required=True, help="number of samples")
    p_test.add_argument(
        "--v", type=_parse_v, required=True, help="comma-separated feature frequencies"
    )
    p_test.add_argument("--i", type=int, required=True, help="observed incidence")
    p_test.add_argument("--digits", type=int, default=2)
    p_test.add_argument("--format", choices=("text", "json"), default="text")
    p_test.add_argument(
        "--method",
        choices=(METHOD_CLOSED_FORM, METHOD_PMF_SUMMATION),
        default=METHOD_CLOSED_FORM,
        help="tail evaluation route; both give the same exact value",
    )
    p_test.add_argument(
        "--series",
        action="store_true",
        help="include the full PMF/tail series in json output",
    )

    p_disc = sub.add_parser(
        "discover", help="enumerate and score concepts of a matrix file"
    )
    p_disc.add_argument("--input", required=True, help="csv/tsv path, or - for stdin")
    p_disc.add_argument(
        "--input-format",
        choices=(FORMAT_CSV, FORMAT_TSV),
        default=None,
        help="default: inferred from suffix, csv for stdin",
    )
    p_disc.add_argument("--min-extent", type=int, default=1)
    p_disc.add_argument("--max-extent", type=int, default=None)
    p_disc.add_argument("--max-intent", type=int, default=None)
    p_disc.add_argument("--p-threshold", type=_parse_threshold, default=Fraction(1))
    p_disc.add_argument("--subsample", type=int, default=None, metavar="ROWS")
    p_disc.add_argument("--seed", type=int, default=0)
    p_disc.add_argument("--digits", type=int, default=2)
    p_disc.add_argument("--format", choices=("text", "json"), default="text")

    p_ver = sub.add_parser(
        "verify", help="cross-check counting formulas against enumeration"
    )
    p_ver.add_argument("--max-n", type=int, default=4)
    p_ver.add_argument("--max-k", type=int, default=2)
    return parser


def _run_test(args: argparse.Namespace) -> int:
    marginals = Marginals(args.n, args.v)
    result = coincidence_test(marginals, args.i, method=args.method)
    if args.format == "json":
        payload = report.test_result_json(result, args.digits)
        if args.series:
            payload["distribution"] = report.distribution_json(marginals, args.digits)
        print(report.render_json(payload))
    else:
        print(report.render_test_text(result, args.digits))
    return EXIT_OK


def _run_discover(args: argparse.Namespace) -> int:
    if args.input == "-":
        fmt = args.input_format or FORMAT_CSV
        ctx = parse_text(sys.stdin.read(), fmt=fmt)
    else:
        ctx = parse_path(args.input, fmt=args.input_format)
    if args.subsample is not None:
        ctx = subsample(ctx, args.subsample, args.seed)
    filters = DiscoveryFilters(
        min_extent=args.min_extent,
        max_extent=args.max_extent,
        max_intent_size=args.max_intent,
        p_threshold=args.p_threshold,
    )
    findings = discover(ctx, filters)
    if args.format == "json":
        payload = {
            "n": ctx.n,
            "k": ctx.k,
            "findings": report.findings_json(ctx, findings, args.digits),
        }
        print(report.render_json(payload))
    else:
        print(report.render_findings_text(ctx, findings, args.digits))
    return EXIT_OK


def _run_verify(args: argparse.Namespace) -> int:
    cases = run_verification(args.max_n, args.max_k)
    failed = 0
    for case in cases:
        status = "pass" if case.passed else "FAIL"
        print(f"{status}  {case.check}  n={case.n} k={case.k}  {case.detail}")
        if not case.passed:
            failed += 1
    print(f"{len(cases) - failed}/{len(cases)} checks passed")
    return EXIT_OK if failed == 0 else EXIT_FAILED


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits on usage errors and --help
        return int(exc.code or 0)
    handlers = {
        "test": _run_test,
        "discover": _run_discover,
        "verify": _run_verify,
    }
    try:
        return handlers[args.subcommand](args)
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InvalidInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entrypoint() -> None:
    sys.exit(main())
