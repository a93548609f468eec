"""
polynomial.py
=============
Bivariate polynomial product with exact two-line rendering.

  parse_polynomial  →  multiply  →  simplify_(unsorted|sorted)  →  render_two_line

Input notation is terse: "-yx8+9x3-1+y" means -x^8*y + 9x^3 - 1 + y.
Output is two lines, exponents raised above the base line:

       13 2    11
    - x  y  - x  y ...
"""

import functools
import itertools
import logging
from typing import Callable, Literal

from engine.errors import ArithmeticOverflowError, PolynomialParseError
from engine.states import INT64_MAX, INT64_MIN, Polynomial, Term

logger = logging.getLogger(__name__)

Strategy = Literal["unsorted", "sorted"]

_DIGITS = "0123456789"
_VARIABLES = "xy"
_SIGNS = "+-"
_INT64_DIGITS = len(str(INT64_MAX))


def _checked(value: int, what: str) -> int:
    if not INT64_MIN <= value <= INT64_MAX:
        raise ArithmeticOverflowError(f"{what} {value} does not fit in 64 bits")
    return value


# ─────────────────────────────────────────────────────────────────────────────
# Parsing
# ─────────────────────────────────────────────────────────────────────────────

def _read_number(text: str, pos: int, default: int, what: str) -> tuple[int, int]:
    """Reads a run of digits starting at pos; returns (value, next position)."""
    end = pos
    while end < len(text) and text[end] in _DIGITS:
        end += 1
    if end == pos:
        return default, pos
    digits = text[pos:end].lstrip("0")
    # length first: int() refuses digit runs past the interpreter limit
    if len(digits) > _INT64_DIGITS or (digits and int(digits) > INT64_MAX):
        shown = digits if len(digits) <= _INT64_DIGITS else f"of {len(digits)} digits"
        raise PolynomialParseError(pos, f"{what} {shown} does not fit in 64 bits")
    return int(digits or "0"), end


def parse_polynomial(text: str) -> Polynomial:
    """
    Parses one polynomial in the compact input notation into a raw Polynomial,
    one Term per textual term and in input order.

    Each term is  [sign][digits][var[digits]][var[digits]]  with var in {x, y},
    either order, each at most once. A missing coefficient or exponent is 1,
    an absent variable has exponent 0. A leading '+' is accepted.
    """
    if not text:
        raise PolynomialParseError(0, "empty polynomial")

    terms: list[Term] = []
    pos = 0
    while pos < len(text):
        sign = 1
        if text[pos] in _SIGNS:
            sign = -1 if text[pos] == "-" else 1
            pos += 1

        term_start = pos
        magnitude, pos = _read_number(text, pos, 1, "coefficient")
        exponents = {"x": 0, "y": 0}
        seen: set[str] = set()
        while pos < len(text) and text[pos] in _VARIABLES:
            var = text[pos]
            if var in seen:
                raise PolynomialParseError(pos, f"variable {var!r} appears twice in one term")
            seen.add(var)
            exponents[var], pos = _read_number(text, pos + 1, 1, "exponent")

        if pos == term_start:
            if pos < len(text) and text[pos] not in _SIGNS:
                raise PolynomialParseError(pos, f"unexpected character {text[pos]!r}")
            raise PolynomialParseError(pos, "empty term")
        if pos < len(text) and text[pos] not in _SIGNS:
            raise PolynomialParseError(pos, f"unexpected character {text[pos]!r}")

        terms.append(Term(coeff=sign * magnitude, xexp=exponents["x"], yexp=exponents["y"]))

    return Polynomial(terms=tuple(terms))


# ─────────────────────────────────────────────────────────────────────────────
# Term algebra
# ─────────────────────────────────────────────────────────────────────────────

def term_product(t1: Term, t2: Term) -> Term:
    """(c1, x1, y1) ⊗ (c2, x2, y2) = (c1*c2, x1+x2, y1+y2)."""
    return Term(
        coeff=_checked(t1.coeff * t2.coeff, "coefficient"),
        xexp=_checked(t1.xexp + t2.xexp, "x exponent"),
        yexp=_checked(t1.yexp + t2.yexp, "y exponent"),
    )


def term_sort_key(term: Term) -> tuple[int, int]:
    return -term.xexp, -term.yexp


def term_compare(t1: Term, t2: Term) -> int:
    """
    Output order: -1 when t1 is printed before t2, 1 when after, 0 when both
    share exponents. Descending x exponent, ties broken by descending y.
    Coefficients are ignored.
    """
    k1, k2 = term_sort_key(t1), term_sort_key(t2)
    return (k1 > k2) - (k1 < k2)


def multiply(p1: Polynomial, p2: Polynomial) -> Polynomial:
    """Every pairwise term product, |p1|*|p2| terms, nothing merged."""
    raw = tuple(term_product(t1, t2) for t1 in p1.terms for t2 in p2.terms)
    logger.debug("[polymul] %d x %d terms -> %d raw terms", len(p1.terms), len(p2.terms), len(raw))
    return Polynomial(terms=raw)


# ─────────────────────────────────────────────────────────────────────────────
# Cleanup strategies
# ─────────────────────────────────────────────────────────────────────────────

def simplify_unsorted(p: Polynomial) -> Polynomial:
    """Merge by linear lookup into the result so far (quadratic), then sort."""
    merged: list[Term] = []
    for term in p.terms:
        for i, kept in enumerate(merged):
            if term_compare(kept, term) == 0:
                merged[i] = Term(
                    coeff=_checked(kept.coeff + term.coeff, "coefficient sum"),
                    xexp=kept.xexp,
                    yexp=kept.yexp,
                )
                break
        else:
            merged.append(term)

    nonzero = [t for t in merged if t.coeff != 0]
    return Polynomial(terms=tuple(sorted(nonzero, key=term_sort_key)))


def _merge_run(run: list[Term]) -> Term:
    def add(total: int, term: Term) -> int:
        return _checked(total + term.coeff, "coefficient sum")

    head = run[0]
    return Term(coeff=functools.reduce(add, run[1:], head.coeff), xexp=head.xexp, yexp=head.yexp)


def simplify_sorted(p: Polynomial) -> Polynomial:
    """Sort first so equal exponents sit together, then merge each run."""
    ordered = sorted(p.terms, key=term_sort_key)
    merged = (_merge_run(list(run)) for _, run in itertools.groupby(ordered, key=term_sort_key))
    return Polynomial(terms=tuple(t for t in merged if t.coeff != 0))


STRATEGIES: dict[str, Callable[[Polynomial], Polynomial]] = {
    "unsorted": simplify_unsorted,
    "sorted": simplify_sorted,
}


def product(p1: Polynomial, p2: Polynomial, strategy: Strategy = "sorted") -> Polynomial:
    """Canonical product of two polynomials using the chosen cleanup."""
    try:
        simplify = STRATEGIES[strategy]
    except KeyError:
        raise ValueError(f"unknown strategy {strategy!r}; choose from {sorted(STRATEGIES)}") from None
    result = simplify(multiply(p1, p2))
    logger.debug("[polymul] %s cleanup kept %d terms", strategy, len(result.terms))
    return result


def evaluate(p: Polynomial, x: int, y: int) -> int:
    """Exact value of p at the integer point (x, y)."""
    return sum(t.coeff * x ** t.xexp * y ** t.yexp for t in p.terms)


# ─────────────────────────────────────────────────────────────────────────────
# Rendering
# ─────────────────────────────────────────────────────────────────────────────

def render_two_line(p: Polynomial) -> tuple[str, str]:
    """
    Returns (exponent line, base line) for a canonical polynomial.

    Both lines are built from same-width pieces so exponent digits sit exactly
    above the blanks reserved for them in the base line. Coefficients of
    magnitude 1 are dropped unless the term is a bare constant; exponents of 1
    are dropped; x always precedes y. Trailing blanks are trimmed.
    """
    if p.is_zero:
        return "", "0"

    upper: list[str] = []
    lower: list[str] = []

    def put(base: str, raised: str = "") -> None:
        if raised:
            lower.append(" " * len(raised))
            upper.append(raised)
        else:
            lower.append(base)
            upper.append(" " * len(base))

    for index, term in enumerate(p.terms):
        if index == 0:
            put("- " if term.coeff < 0 else "")
        else:
            put(" - " if term.coeff < 0 else " + ")

        magnitude = abs(term.coeff)
        if magnitude != 1 or not term.has_variable:
            put(str(magnitude))
        for var, exp in (("x", term.xexp), ("y", term.yexp)):
            if exp == 0:
                continue
            put(var)
            if exp >= 2:
                put("", str(exp))

    return "".join(upper).rstrip(), "".join(lower).rstrip()


def render_polynomial(p: Polynomial) -> str:
    """The two rendered lines joined by a newline, exponent line first."""
    return "\n".join(render_two_line(p))
