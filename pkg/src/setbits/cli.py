"""Command-line interface.

Exit status: 0 on success, 1 when the differential fuzzer finds a
divergence, 2 for usage, parse and range errors.
"""
from __future__ import annotations

import argparse
import sys

from . import bit_ops
from .bench import bench
from .big_set import BigSet
from .errors import DomainError, SetError
from .expr import DEFAULT_UNIVERSE, ExprError, evaluate, parse, tokenize
from .oracle import generate_program, run_differential

DEFAULT_WIDTH = 16

EXIT_OK, EXIT_DIVERGED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _width(text: str) -> int:
    value = int(text)
    if value not in bit_ops.REPR_WIDTHS:
        raise argparse.ArgumentTypeError(f"must be one of 8, 16, 32, got {value}")
    return value


def _add_globals(parser: argparse.ArgumentParser, suppress: bool) -> None:
    # subcommands repeat the global flags; SUPPRESS keeps them from
    # overwriting a value given before the subcommand name
    def default(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument("--universe", type=_positive, default=default(DEFAULT_UNIVERSE),
                        help="universe size n for sets over {1..n} (default 32)")
    parser.add_argument("--width", type=_width, default=default(DEFAULT_WIDTH),
                        help="bit width for repr (8, 16 or 32; default 16)")
    parser.add_argument("--seed", type=int, default=default(0),
                        help="random seed for fuzz and bench (default 0)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="setbits",
        description="Set algebra on integer-encoded subsets of {1..n}.",
    )
    _add_globals(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _add_globals(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate a set expression")
    p.add_argument("expression")

    p = sub.add_parser("repr", parents=[common], help="two's-complement bit pattern")
    p.add_argument("x", type=int)

    p = sub.add_parser("bin", parents=[common], help="minimal signed binary form")
    p.add_argument("x", type=int)

    p = sub.add_parser("popcount", parents=[common], help="number of 1 bits in |x|")
    p.add_argument("x", type=int)

    p = sub.add_parser("encode", parents=[common], help="element list -> decimal code")
    p.add_argument("elements", help="comma-separated elements, e.g. 1,4,6")

    p = sub.add_parser("decode", parents=[common], help="decimal code -> element list")
    p.add_argument("code", type=_non_negative)

    p = sub.add_parser("fuzz", parents=[common], help="differential test against the naive oracle")
    p.add_argument("--cases", type=_non_negative, default=10_000)

    p = sub.add_parser("bench", parents=[common], help="time bitwise vs naive sets")
    p.add_argument("--iters", type=_positive, default=1000)
    p.add_argument("--lines", action="store_true",
                   help="print op,impl,ns_per_op,bytes_per_set lines instead of a table")
    return parser


def _parse_elements(text: str) -> list[int]:
    parts = [p.strip() for p in text.split(",")]
    if parts == [""]:
        return []
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise UsageError(f"not a comma-separated integer list: {text!r}") from None


def format_set(s: BigSet) -> str:
    bits = format(s.code, "b").zfill(s.universe_size)
    return f"elements: {s}\ncode: {s.code}\nbinary: {bits}"


def _cmd_eval(args, out) -> int:
    result = evaluate(parse(tokenize(args.expression)), args.universe)
    if isinstance(result, bool):
        print("true" if result else "false", file=out)
    else:
        print(format_set(result), file=out)
    return EXIT_OK


def _cmd_fuzz(args, out) -> int:
    program = generate_program(args.seed, args.cases, args.universe)
    report = run_differential(program, args.universe)
    if report.ok:
        print(f"ok: {args.cases} cases", file=out)
        return EXIT_OK
    print(report.describe(), file=out)
    return EXIT_DIVERGED


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        cmd = args.command
        if cmd == "eval":
            return _cmd_eval(args, out)
        if cmd == "repr":
            print(bit_ops.twos_complement_repr(args.x, args.width), file=out)
        elif cmd == "bin":
            print(bit_ops.min_binary_repr(args.x), file=out)
        elif cmd == "popcount":
            print(bit_ops.popcount(args.x), file=out)
        elif cmd == "encode":
            s = BigSet.encode(_parse_elements(args.elements), args.universe)
            print(s.code, file=out)
        elif cmd == "decode":
            print(BigSet.from_code(args.code, args.universe), file=out)
        elif cmd == "fuzz":
            return _cmd_fuzz(args, out)
        elif cmd == "bench":
            report = bench(args.universe, args.iters, args.seed)
            print(report.to_lines() if args.lines else report.to_table(), file=out)
    except ExprError as exc:
        print(f"error: {exc.message} at offset {exc.offset}", file=err)
        return EXIT_USAGE
    except (DomainError, SetError, UsageError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    return EXIT_OK


def main(argv: list[str] | None = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
