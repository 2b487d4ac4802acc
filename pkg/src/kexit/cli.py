"""Command-line front end.

Subcommands: compute (build and render a K-Exit table), catalog (family
order formulas), verify (cross-check against the big-integer oracle),
fixtures (list shipped fixtures). Data goes to stdout, diagnostics to
stderr. Exit codes: 0 success, 1 verify mismatch, 2 argument or parse
error, 3 validation error, 4 internal limit exceeded.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .catalog import (
    FamilySpec,
    family_order,
    fixture_names,
    get_fixture,
    parse_family,
)
from .core import METHOD_BOTH, METHODS, build_table
from .errors import (
    CompositeTooHardError,
    KExitError,
    ParseError,
    UnknownFixtureError,
    ValidationError,
)
from .model import parse_degrees, parse_order, render_order, validate
from .oracle import compare_with_core
from .render import FORMATS, render

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_INVALID = 3
EXIT_LIMIT = 4


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kexit",
        description="Compute K-Exit tables: prove primes outside pi(K) for "
        "every normal solvable subgroup K of G.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="build and render a K-Exit table")
    _add_input_flags(compute)
    compute.add_argument(
        "--format", choices=FORMATS, default="text", help="output format"
    )
    compute.add_argument(
        "--method",
        choices=METHODS,
        default=METHOD_BOTH,
        help="which witness rule decides exclusion (default: both)",
    )
    compute.add_argument(
        "--annotate-paper-diffs",
        action="store_true",
        help="note on stderr where computed fixture cells differ from the "
        "published tables",
    )
    compute.set_defaults(handler=_cmd_compute)

    catalog = sub.add_parser("catalog", help="order of a simple-group family member")
    catalog.add_argument("family", help="alternating | psl2 | psu3 | psu4 (or A/L2/U3/U4)")
    catalog.add_argument("parameter", type=int, help="n for alternating, prime power q otherwise")
    catalog.add_argument("--format", choices=("text", "json"), default="text")
    catalog.set_defaults(handler=_cmd_catalog)

    verify = sub.add_parser(
        "verify", help="recompute every cell with the big-integer oracle and compare"
    )
    _add_input_flags(verify)
    verify.set_defaults(handler=_cmd_verify)

    fixtures = sub.add_parser("fixtures", help="list shipped fixtures")
    fixtures.set_defaults(handler=_cmd_fixtures)

    return parser


def _add_input_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--fixture", help="name of a shipped fixture (see `kexit fixtures`)")
    sub.add_argument("--order", help="group order, e.g. \"2^11*3*5*7^2*19*31^3\" or JSON")
    sub.add_argument("--degrees", help="degree pattern, e.g. \"3,2,2,1,1,1\" or JSON")
    sub.add_argument(
        "--allow-odd-degree-sum",
        action="store_true",
        help="accept a degree pattern whose sum is odd",
    )


def _context_from_args(args: argparse.Namespace):
    if args.fixture is not None:
        if args.order is not None or args.degrees is not None:
            raise ParseError("--fixture cannot be combined with --order/--degrees")
        fix = get_fixture(args.fixture)
        order, degrees = fix.order, fix.degrees
    else:
        if args.order is None or args.degrees is None:
            raise ParseError("provide --fixture, or both --order and --degrees")
        order = parse_order(args.order)
        degrees = parse_degrees(args.degrees)
    return validate(order, degrees, allow_odd_degree_sum=args.allow_odd_degree_sum)


def _cmd_compute(args: argparse.Namespace) -> int:
    ctx = _context_from_args(args)
    table = build_table(ctx, method=args.method)
    sys.stdout.write(render(table, args.format))
    if args.annotate_paper_diffs:
        _print_annotations(args.fixture)
    return EXIT_OK


def _print_annotations(fixture_name: str | None) -> None:
    if fixture_name is None:
        print(
            "note: --annotate-paper-diffs applies only to --fixture inputs",
            file=sys.stderr,
        )
        return
    fix = get_fixture(fixture_name)
    if not fix.published_diffs:
        print(
            f"note[{fix.name}]: no cells conflict with the published table "
            "(blank cells are printed with computed values)",
            file=sys.stderr,
        )
        return
    for diff in fix.published_diffs:
        printed = ",".join(str(v) for v in diff.printed)
        computed = ",".join(str(v) for v in diff.computed)
        print(
            f"note[{fix.name}]: {diff.cell}({diff.prime}) is printed as "
            f"{printed} in the published table; computed value is {computed}",
            file=sys.stderr,
        )


def _cmd_catalog(args: argparse.Namespace) -> int:
    spec = FamilySpec(parse_family(args.family), args.parameter)
    order = family_order(spec)
    if args.format == "json":
        import json

        payload = {
            "family": spec.family.value,
            "parameter": spec.parameter,
            "order": [list(pair) for pair in order.factors],
            "value": order.value,
        }
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write(render_order(order) + "\n")
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    ctx = _context_from_args(args)
    mismatches = compare_with_core(ctx)
    if not mismatches:
        n = len(ctx.primes)
        print(f"verify: all cells agree ({n} primes, {4 * n} cells)")
        return EXIT_OK
    for miss in mismatches:
        computed = ",".join(str(v) for v in miss.computed) or "(empty)"
        oracle = ",".join(str(v) for v in miss.oracle) or "(empty)"
        print(f"MISMATCH {miss.cell}({miss.prime}): computed {computed}, oracle {oracle}")
    return EXIT_MISMATCH


def _cmd_fixtures(args: argparse.Namespace) -> int:
    for name in fixture_names():
        fix = get_fixture(name)
        print(f"{name}: {fix.label}, |G| = {render_order(fix.order)}, D = {fix.degrees}")
    return EXIT_OK


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help and 2 for usage errors; pass both through.
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except (ParseError, UnknownFixtureError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except CompositeTooHardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except KExitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
