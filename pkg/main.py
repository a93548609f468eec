"""
main.py
=======
Command-line entry point for the three engines.

Usage:
    python main.py polymul  [FILE] [--strategy sorted|unsorted]
    python main.py fibcount PATTERN N [--mode algebraic|stream|naive|growing] [--cap N]
    python main.py treedraw [FILE] [--layout baseline|compact] [--no-bars]

polymul reads pairs of lines (first factor, second factor) until end of input
and writes the two-line rendering of each product. treedraw reads one
s-expression, which may span several lines.

Exit codes:
    0   success
    1   malformed input
    2   usage error, out-of-range argument, oracle cap exceeded
"""

import argparse
import contextlib
import logging
import sys
from typing import Optional, TextIO

from pydantic import ValidationError

from engine import __version__
from engine.errors import (
    ArithmeticOverflowError,
    CapExceededError,
    PolynomialParseError,
    TreeParseError,
)
from engine.fibstring import count
from engine.polynomial import parse_polynomial, product, render_polynomial
from engine.sexpr import parse_tree_sexpr
from engine.states import MAX_INDEX, MAX_PATTERN_LENGTH, FibQuery
from engine.treelayout import draw

logger = logging.getLogger("textkata")

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_USAGE = 2

_CAPPED_MODES = ("stream", "naive")


class InputError(Exception):
    """Malformed input, already formatted for the user."""


# ─────────────────────────────────────────────────────────────────────────────
# Helpers
# ─────────────────────────────────────────────────────────────────────────────

def locate(text: str, position: int) -> tuple[int, int]:
    """1-based (line, column) of a 0-based character position."""
    before = text[:position]
    line = before.count("\n") + 1
    column = position - (before.rfind("\n") + 1) + 1
    return line, column


def _read_source(path: Optional[str], stdin: TextIO) -> str:
    if path is None or path == "-":
        return stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _emit(stdout: TextIO, lines: list[str]) -> None:
    for line in lines:
        stdout.write(line + "\n")


# ─────────────────────────────────────────────────────────────────────────────
# Subcommands
# ─────────────────────────────────────────────────────────────────────────────

def run_polymul(text: str, strategy: str = "sorted") -> list[str]:
    """
    One two-line block per input pair. The whole input is parsed before
    anything is returned, so a bad case yields no partial output.
    """
    numbered = [(no, line.strip()) for no, line in enumerate(text.splitlines(), start=1)]
    factors = [(no, line) for no, line in numbered if line]
    if len(factors) % 2:
        raise InputError(
            f"line {factors[-1][0]}: expected pairs of polynomials, got {len(factors)} lines"
        )

    parsed = []
    for no, line in factors:
        try:
            parsed.append(parse_polynomial(line))
        except PolynomialParseError as exc:
            raise InputError(f"line {no}, column {exc.position + 1}: {exc.message}") from exc

    output: list[str] = []
    for case, (first, second) in enumerate(zip(parsed[::2], parsed[1::2]), start=1):
        try:
            result = product(first, second, strategy)
        except ArithmeticOverflowError as exc:
            raise InputError(f"case {case}: {exc}") from exc
        logger.info("[polymul] case %d: %d terms", case, len(result.terms))
        output.append(render_polynomial(result))
    return output


def run_fibcount(pattern: str, n: int, mode: str = "algebraic", cap: Optional[int] = None) -> list[str]:
    query = FibQuery(pattern=pattern, index_n=n)
    return [str(count(query, mode=mode, cap=cap))]


def run_treedraw(text: str, layout: str = "baseline", bars: bool = True) -> list[str]:
    try:
        root = parse_tree_sexpr(text)
    except TreeParseError as exc:
        line, column = locate(text, exc.position)
        raise InputError(f"line {line}, column {column}: {exc.message}") from exc
    return draw(root, layout, with_bars=bars)


# ─────────────────────────────────────────────────────────────────────────────
# Argument parsing
# ─────────────────────────────────────────────────────────────────────────────

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="textkata",
        description="Polynomial products, Fibonacci-string counts and tree drawings.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="Example:\n  echo '(+ x zz)' | python main.py treedraw",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "-v", "--verbose", action="count", default=0,
        help="Log progress to stderr (-v info, -vv debug).",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    polymul = commands.add_parser("polymul", help="Multiply pairs of polynomials.")
    polymul.add_argument("source", nargs="?", help="Input file (default: stdin).")
    polymul.add_argument(
        "--strategy", choices=["sorted", "unsorted"], default="sorted",
        help="Cleanup path: sort then merge runs, or merge by scanning then sort.",
    )

    fibcount = commands.add_parser("fibcount", help="Count a pattern in F_n.")
    fibcount.add_argument("pattern", help=f"Pattern of 1..{MAX_PATTERN_LENGTH} characters.")
    fibcount.add_argument("n", type=int, help=f"Index 0..{MAX_INDEX}.")
    fibcount.add_argument(
        "--mode", choices=["algebraic", "stream", "naive", "growing"], default="algebraic",
        help="Counting strategy; stream and naive are capped oracles.",
    )
    fibcount.add_argument(
        "--cap", type=int, default=None, help="Override the oracle cap (stream and naive modes only)."
    )

    treedraw = commands.add_parser("treedraw", help="Draw an s-expression tree.")
    treedraw.add_argument("source", nargs="?", help="Input file (default: stdin).")
    treedraw.add_argument("--layout", choices=["baseline", "compact"], default="baseline")
    treedraw.add_argument(
        "--no-bars", dest="bars", action="store_false",
        help="Omit the connector rows.",
    )
    return parser


def _configure_logging(verbosity: int, stderr: TextIO) -> None:
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(
        stream=stderr, level=level, format="%(levelname)s %(name)s: %(message)s", force=True
    )


# ─────────────────────────────────────────────────────────────────────────────
# Entry point
# ─────────────────────────────────────────────────────────────────────────────

def main(
    argv: Optional[list[str]] = None,
    stdin: Optional[TextIO] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr

    parser = build_parser()
    # argparse prints usage, errors and --version straight to sys.std*
    with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
        try:
            args = parser.parse_args(argv)
            if args.command == "fibcount" and args.cap is not None and args.mode not in _CAPPED_MODES:
                parser.error(f"--cap only applies to the {' and '.join(_CAPPED_MODES)} modes")
        except SystemExit as exc:
            return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    _configure_logging(args.verbose, stderr)

    try:
        if args.command == "polymul":
            lines = run_polymul(_read_source(args.source, stdin), args.strategy)
        elif args.command == "fibcount":
            lines = run_fibcount(args.pattern, args.n, args.mode, args.cap)
        else:
            lines = run_treedraw(_read_source(args.source, stdin), args.layout, args.bars)
    except ValidationError as exc:
        # only FibQuery bounds reach here
        problems = "; ".join(err["msg"] for err in exc.errors())
        stderr.write(f"textkata {args.command}: error: {problems}\n")
        stderr.write(f"pattern must be 1..{MAX_PATTERN_LENGTH} characters and 0 <= n <= {MAX_INDEX}\n")
        return EXIT_USAGE
    except CapExceededError as exc:
        stderr.write(f"textkata {args.command}: error: {exc}\n")
        return EXIT_USAGE
    except InputError as exc:
        stderr.write(f"textkata {args.command}: {exc}\n")
        return EXIT_INPUT
    except OSError as exc:
        stderr.write(f"textkata {args.command}: cannot read input: {exc}\n")
        return EXIT_INPUT

    _emit(stdout, lines)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
