"""Command-line front end.

Subcommands:

  build <script.geo> [--n K | --symbolic]   run a construction script
  verify-paper [--json] [--n-max K]         re-check every closed-form result
  geography --n-min A --n-max B [--csv P] [--svg P]
  exotic --n K --count C                    knot-surgery family report

Exit codes: 0 success, 1 check/construction failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import geography
from .algebra import scalar_str
from .calculus import ManifoldRecord, MarkedSurface
from .pipeline import exotic_family, verify_formulas
from .script import ScriptError, evaluate, parse


def _print_manifold(record: ManifoldRecord, out) -> None:
    inv = record.invariants()
    print(f"e     = {scalar_str(inv['e'])}", file=out)
    print(f"sigma = {scalar_str(inv['sigma'])}", file=out)
    print(f"c2    = {scalar_str(inv['c2'])}", file=out)
    print(f"c1^2  = {scalar_str(inv['c1sq'])}", file=out)
    print(f"chi_h = {scalar_str(inv['chi_h'])}", file=out)
    print(f"simply connected: {record.simply_connected}", file=out)
    print(f"symplectic: {record.symplectic}", file=out)
    if record.sw is not None:
        print(f"sw ledger: {record.sw}", file=out)
    for name, surface in record.surfaces:
        print(f"surface {name}: genus {scalar_str(surface.genus)}, "
              f"self-intersection {scalar_str(surface.self_int)}", file=out)
    print("log:", file=out)
    for entry in record.log:
        print(f"  {entry}", file=out)


def _cmd_build(args) -> int:
    try:
        with open(args.script, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    try:
        ast = parse(text)
    except ScriptError as err:
        print(f"{args.script}: {err}", file=sys.stderr)
        return 2
    try:
        value = evaluate(ast, None if args.n is None else args.n)
    except ScriptError as err:
        print(f"{args.script}: {err}", file=sys.stderr)
        return 1
    mode = "symbolic (polynomials in n)" if args.n is None else f"numeric, n = {args.n}"
    print(f"mode: {mode}")
    if isinstance(value, ManifoldRecord):
        _print_manifold(value, sys.stdout)
    elif isinstance(value, MarkedSurface):
        print(f"surface: genus {scalar_str(value.genus)}, "
              f"self-intersection {scalar_str(value.self_int)}")
    else:
        print(f"value = {scalar_str(value)}")
    return 0


def _cmd_verify(args) -> int:
    checks = verify_formulas(n_max=args.n_max)
    if args.json:
        payload = [
            {"name": c.name, "expected": c.expected, "got": c.got, "pass": c.passed, "note": c.note}
            for c in checks
        ]
        print(json.dumps(payload, indent=2))
    else:
        for c in checks:
            status = "PASS" if c.passed else "FAIL"
            print(f"[{status}] {c.name}: expected {c.expected}, got {c.got}")
        warnings = [c for c in checks if c.note]
        if warnings:
            print()
            print("warnings:")
            for c in warnings:
                print(f"  {c.name}: {c.note}")
        failed = sum(1 for c in checks if not c.passed)
        print()
        print(f"{len(checks)} checks: {len(checks) - failed} passed, {failed} failed, "
              f"{len(warnings)} warning(s)")
    return 0 if all(c.passed for c in checks) else 1


def _cmd_geography(args) -> int:
    if args.n_min < 2:
        print("error: --n-min must be at least 2 (the construction needs n >= 2)",
              file=sys.stderr)
        return 2
    if args.n_max < args.n_min:
        print("error: --n-max must be >= --n-min", file=sys.stderr)
        return 2
    rows = geography.scan(args.n_min, args.n_max)
    csv_text = geography.render_csv(rows)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            fh.write(csv_text)
    else:
        sys.stdout.write(csv_text)
    if args.svg:
        with open(args.svg, "w", encoding="utf-8", newline="") as fh:
            fh.write(geography.render_svg(rows))
    return 0


def _cmd_exotic(args) -> int:
    if args.n < 2:
        print("error: --n must be at least 2", file=sys.stderr)
        return 2
    if args.count < 1:
        print("error: --count must be at least 1", file=sys.stderr)
        return 2
    report = exotic_family(args.n, args.count)
    base = report.base
    print(f"base manifold (n = {report.n}): e = {scalar_str(base.e)}, "
          f"sigma = {scalar_str(base.sigma)}, c1^2 = {scalar_str(base.c1sq)}, "
          f"chi_h = {scalar_str(base.chi_h)}")
    print(f"surgeries along the surviving square-zero torus: "
          f"{len(report.family.entries)} knots")
    for entry in report.family.entries:
        kind = "symplectic" if entry.symplectic_candidate else "non-symplectic candidate"
        monic = "monic" if entry.monic else "non-monic"
        note = f"  [{entry.note}]" if entry.note else ""
        print(f"  {entry.knot}: {kind}, {monic}, sw = {entry.sw}{note}")
    print(f"symplectic candidates: {report.symplectic_count}; "
          f"non-symplectic candidates: {report.non_symplectic_count}")
    if report.family.pairwise_distinct:
        print("all Seiberg-Witten values pairwise distinct: "
              "the results are pairwise non-diffeomorphic")
        return 0
    print("COLLISION among Seiberg-Witten values:", file=sys.stderr)
    for a, b in report.family.collisions:
        print(f"  {a} vs {b}", file=sys.stderr)
    return 1


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fourgeo",
        description="Exact surgery calculus for 4-manifold geography.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="run a .geo construction script")
    p_build.add_argument("script", help="path to the script")
    mode = p_build.add_mutually_exclusive_group()
    mode.add_argument("--n", type=int, help="numeric mode at this parameter value")
    mode.add_argument("--symbolic", action="store_true",
                      help="symbolic mode (default): invariants as polynomials in n")
    p_build.set_defaults(fn=_cmd_build)

    p_verify = sub.add_parser("verify-paper",
                              help="re-derive and check every closed-form result")
    p_verify.add_argument("--json", action="store_true", help="machine-readable report")
    p_verify.add_argument("--n-max", type=int, default=50,
                          help="top of the numeric scan range (default 50)")
    p_verify.set_defaults(fn=_cmd_verify)

    p_geo = sub.add_parser("geography", help="scan the family into CSV/SVG")
    p_geo.add_argument("--n-min", type=int, required=True)
    p_geo.add_argument("--n-max", type=int, required=True)
    p_geo.add_argument("--csv", help="write CSV here (default: stdout)")
    p_geo.add_argument("--svg", help="write an SVG scatter of (chi_h, c1^2) here")
    p_geo.set_defaults(fn=_cmd_geography)

    p_exotic = sub.add_parser("exotic", help="pairwise-distinct smooth structures "
                                             "via knot surgery")
    p_exotic.add_argument("--n", type=int, required=True)
    p_exotic.add_argument("--count", type=int, required=True,
                          help="torus knots and twist knots to apply, each")
    p_exotic.set_defaults(fn=_cmd_exotic)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, RuntimeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
