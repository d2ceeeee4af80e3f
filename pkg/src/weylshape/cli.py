"""Command-line front end: ``weylshape <subcommand> ...``."""

from __future__ import annotations

import argparse
import os
import random
import sys
from pathlib import Path
from typing import Sequence

from .bracket import bracket, f_poly
from .errors import WeylShapeError
from .geometry import Direction, directions, en, leading, st
from .properties import run_all
from .render import render_ascii, render_svg
from .shapes import check_bound, emit_table, summary_lines
from .weyl import format_point, parse

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_UNRESOLVED = 2
EXIT_USAGE = 64
EXIT_BAD_INPUT = 65

DEFAULT_SEED = 0xD1C3
DEFAULT_CASES = 500


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse exits with 2 by default
        raise UsageError(message)


def _seed_default() -> int:
    raw = os.environ.get("WEYLSHAPE_SEED")
    if raw is None:
        return DEFAULT_SEED
    try:
        return int(raw, 0)
    except ValueError:
        raise UsageError(f"WEYLSHAPE_SEED is not an integer: {raw!r}")


def _positive(minimum: int):
    def convert(text: str) -> int:
        try:
            value = int(text, 0)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
        if value < minimum:
            raise argparse.ArgumentTypeError(f"must be at least {minimum}")
        return value

    return convert


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="weylshape", description="Exact computations with Weyl-algebra supports.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check-bound", help="enumerate and refute corner candidates")
    p.add_argument("--max-sum", type=_positive(5), required=True)
    p.add_argument("--format", choices=("md", "csv", "json"), default="md")
    p.add_argument("--jobs", type=_positive(1), default=1)

    p = sub.add_parser("eval", help="support geometry of one element")
    p.add_argument("--expr", required=True)
    p.add_argument("--dir", default=None)
    p.add_argument("--show", choices=("supp", "leading", "st", "en", "fpoly", "dirs"), required=True)

    p = sub.add_parser("bracket", help="(rho,sigma)-bracket of two elements")
    p.add_argument("--p", required=True)
    p.add_argument("--q", required=True)
    p.add_argument("--dir", required=True)

    p = sub.add_parser("polygon", help="draw the Newton polygon of an element")
    p.add_argument("--expr", required=True)
    p.add_argument("--out", default=None, help="SVG output file (default: stdout)")
    p.add_argument("--dir", default=None, help="mark st/en for this direction")
    p.add_argument("--ascii", action="store_true", help="print a text rendering instead of SVG")

    p = sub.add_parser("selftest", help="run the seeded property suites")
    p.add_argument("--seed", type=lambda s: int(s, 0), default=None)
    p.add_argument("--cases", type=_positive(1), default=DEFAULT_CASES)
    return parser


def _need_dir(args) -> Direction:
    if args.dir is None:
        raise WeylShapeError(f"--show {args.show} needs --dir")
    return Direction.parse(args.dir)


def cmd_check_bound(args, out) -> int:
    summary = check_bound(args.max_sum, args.jobs)
    out.write(emit_table(summary.reports, args.format))
    # keep csv/json output machine-readable
    stream = out if args.format == "md" else sys.stderr
    if args.format == "md":
        out.write("\n")
    stream.write("\n".join(summary_lines(summary)) + "\n")
    return EXIT_OK if summary.unresolved == 0 else EXIT_UNRESOLVED


def cmd_eval(args, out) -> int:
    P = parse(args.expr)
    show = args.show
    if show == "supp":
        text = "[" + ", ".join(format_point(p) for p in sorted(P.terms)) + "]"
    elif show == "dirs":
        text = "[" + ", ".join(str(d) for d in directions(P)) + "]" if P.terms else "[]"
    else:
        d = _need_dir(args)
        if show == "leading":
            text = str(leading(P, d))
        elif show == "st":
            text = format_point(st(P, d))
        elif show == "en":
            text = format_point(en(P, d))
        else:
            text = str(f_poly(P, d))
    out.write(text + "\n")
    return EXIT_OK


def cmd_bracket(args, out) -> int:
    outcome = bracket(parse(args.p), parse(args.q), Direction.parse(args.dir))
    out.write(f"{outcome}\n")
    return EXIT_OK


def cmd_polygon(args, out) -> int:
    P = parse(args.expr)
    if not P.terms:
        raise WeylShapeError("cannot draw the zero element")
    d = Direction.parse(args.dir) if args.dir else None
    if args.ascii:
        out.write(render_ascii(P, d))
        return EXIT_OK
    svg = render_svg(P, d)
    if args.out:
        Path(args.out).write_text(svg, encoding="utf-8")
    else:
        out.write(svg)
    return EXIT_OK


def cmd_selftest(args, out) -> int:
    seed = args.seed if args.seed is not None else _seed_default()
    results = run_all(seed, args.cases)
    for r in results:
        out.write(r.line() + "\n")
        for f in r.failures:
            out.write(f"    {f}\n")
    total_fail = sum(r.failed for r in results)
    out.write(f"seed {seed:#x}: {sum(r.passed for r in results)} passed, {total_fail} failed\n")
    return EXIT_OK if total_fail == 0 else EXIT_FAILURE


COMMANDS = {
    "check-bound": cmd_check_bound,
    "eval": cmd_eval,
    "bracket": cmd_bracket,
    "polygon": cmd_polygon,
    "selftest": cmd_selftest,
}


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        sys.stderr.write(f"weylshape: usage error: {exc}\n")
        return EXIT_USAGE
    except (WeylShapeError, ValueError, OSError) as exc:
        sys.stderr.write(f"weylshape: error: {exc}\n")
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
