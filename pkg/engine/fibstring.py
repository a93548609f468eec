"""
fibstring.py
============
Counting occurrences of a short pattern S in the Fibonacci strings

    F_0 = "A",  F_1 = "B",  F_n = F_{n-1} + F_{n-2}

Four ways, each an oracle for the others:

  naive      build_explicit + scan_count        (memory grows like |F_n|)
  stream     stream_count                       (no memory, same running time)
  algebraic  count_occurrences                  (explicit seeds, then summaries)
  growing    count_occurrences_growing          (summaries from the letters up)

A summary (prefix, count, suffix) keeps only |S|-1 characters at each end;
new occurrences can only appear at the seam of a concatenation.
"""

import logging
import re
from typing import Literal, Optional

from engine.errors import CapExceededError, ContractError
from engine.limits import load_limits
from engine.states import FibQuery, OccurrenceSummary

logger = logging.getLogger(__name__)

Mode = Literal["algebraic", "stream", "naive", "growing"]

_SEEDS = ("A", "B")


def fib_length(n: int) -> int:
    """|F_n| = Fib(n+1), without building anything."""
    if n < 0:
        raise ContractError(f"index must be non-negative, got {n}")
    shorter, longer = 1, 1
    for _ in range(n):
        shorter, longer = longer, shorter + longer
    return shorter


def _tail(text: str, keep: int) -> str:
    # text[-0:] would be the whole string
    return text[-keep:] if keep else ""


# ─────────────────────────────────────────────────────────────────────────────
# Naive strategy
# ─────────────────────────────────────────────────────────────────────────────

def build_explicit(n: int, cap: Optional[int] = None) -> str:
    """Materializes F_n. Refuses n above the explicit cap."""
    cap = load_limits().explicit_max_n if cap is None else cap
    if n < 0:
        raise ContractError(f"index must be non-negative, got {n}")
    if n > cap:
        raise CapExceededError("explicit", n, cap)

    older, newer = _SEEDS
    if n == 0:
        return older
    for _ in range(n - 1):
        older, newer = newer, newer + older
    return newer


def scan_count(text: str, pattern: str) -> int:
    """Starting positions where pattern occurs in text, overlaps included."""
    if not pattern:
        raise ContractError("pattern must not be empty")
    return sum(1 for _ in re.finditer(f"(?={re.escape(pattern)})", text))


# ─────────────────────────────────────────────────────────────────────────────
# Streaming strategy
# ─────────────────────────────────────────────────────────────────────────────

def stream_count(query: FibQuery, cap: Optional[int] = None) -> int:
    """
    Walks the derivation of F_n letter by letter, keeping a window of the last
    |S| letters; every time the window equals S an occurrence is counted.
    """
    cap = load_limits().stream_max_n if cap is None else cap
    if query.index_n > cap:
        raise CapExceededError("stream", query.index_n, cap)

    pattern = query.pattern
    width = len(pattern)
    window = ""
    count = 0
    pending = [query.index_n]
    while pending:
        k = pending.pop()
        if k >= 2:
            # F_{k-1} is emitted before F_{k-2}
            pending.append(k - 2)
            pending.append(k - 1)
            continue
        window = (window + _SEEDS[k])[-width:]
        if window == pattern:
            count += 1
    return count


# ─────────────────────────────────────────────────────────────────────────────
# Summary algebra
# ─────────────────────────────────────────────────────────────────────────────

def junction_count(left_suffix: str, right_prefix: str, pattern: str) -> int:
    """
    Occurrences of pattern in left_suffix + right_prefix that take at least one
    character from each side.
    """
    keep = len(pattern) - 1
    if keep < 0:
        raise ContractError("pattern must not be empty")
    if len(left_suffix) > keep or len(right_prefix) > keep:
        raise ContractError(
            f"junction fragments must be at most {keep} characters "
            f"(got {len(left_suffix)} and {len(right_prefix)})"
        )

    seam = left_suffix + right_prefix
    cut = len(left_suffix)
    width = len(pattern)
    return sum(
        1
        for start in range(len(seam) - width + 1)
        if start < cut < start + width and seam.startswith(pattern, start)
    )


def summary_of_string(text: str, pattern: str) -> OccurrenceSummary:
    """Summarizes an explicit string at least twice as long as the pattern."""
    if not pattern:
        raise ContractError("pattern must not be empty")
    if len(text) < 2 * len(pattern):
        raise ContractError(
            f"text of length {len(text)} is shorter than twice the pattern ({2 * len(pattern)})"
        )
    keep = len(pattern) - 1
    return OccurrenceSummary(
        prefix=text[:keep],
        count=scan_count(text, pattern),
        suffix=_tail(text, keep),
    )


def summary_concat(
    left: OccurrenceSummary, right: OccurrenceSummary, pattern: str
) -> OccurrenceSummary:
    """Summary of left + right. Both operands must be saturated."""
    for side, operand in (("left", left), ("right", right)):
        if not operand.is_saturated(pattern):
            raise ContractError(
                f"{side} summary is not saturated: prefix/suffix must hold "
                f"{len(pattern) - 1} characters"
            )
    return OccurrenceSummary(
        prefix=left.prefix,
        count=left.count + right.count + junction_count(left.suffix, right.prefix, pattern),
        suffix=right.suffix,
    )


def bootstrap_index(pattern_length: int) -> int:
    """Smallest k with |F_k| >= 2|S|."""
    k = 0
    while fib_length(k) < 2 * pattern_length:
        k += 1
    return k


def count_occurrences(query: FibQuery) -> int:
    """
    Builds F_k and F_{k+1} explicitly for the first k where they are at least
    twice as long as S, summarizes both, then composes summaries up to n.
    Short targets are scanned directly.
    """
    pattern, n = query.pattern, query.index_n
    if fib_length(n) < 2 * len(pattern):
        return scan_count(build_explicit(n), pattern)

    k = bootstrap_index(len(pattern))
    logger.debug("[fibcount] bootstrap at k=%d for |S|=%d", k, len(pattern))
    older = summary_of_string(build_explicit(k), pattern)
    if n == k:
        return older.count
    newer = summary_of_string(build_explicit(k + 1), pattern)
    for _ in range(k + 2, n + 1):
        older, newer = newer, summary_concat(newer, older, pattern)
    return newer.count


# ─────────────────────────────────────────────────────────────────────────────
# Growing summaries
# ─────────────────────────────────────────────────────────────────────────────

def letter_summary(letter: str, pattern: str) -> OccurrenceSummary:
    """Summary of a one-letter string."""
    keep = len(pattern) - 1
    if keep < 0:
        raise ContractError("pattern must not be empty")
    return OccurrenceSummary(
        prefix=letter[:keep],
        count=int(letter == pattern),
        suffix=_tail(letter, keep),
    )


def summary_concat_growing(
    left: OccurrenceSummary, right: OccurrenceSummary, pattern: str
) -> OccurrenceSummary:
    """
    Like summary_concat, but operands may be short. A summary whose prefix is
    shorter than |S|-1 stands for a string equal to its prefix and to its
    suffix; prefixes and suffixes grow until they reach |S|-1.
    """
    keep = len(pattern) - 1
    junction = junction_count(left.suffix, right.prefix, pattern)
    prefix = left.prefix if len(left.prefix) >= keep else (left.prefix + right.prefix)[:keep]
    suffix = right.suffix if len(right.suffix) >= keep else _tail(left.suffix + right.suffix, keep)
    return OccurrenceSummary(
        prefix=prefix,
        count=left.count + right.count + junction,
        suffix=suffix,
    )


def count_occurrences_growing(query: FibQuery) -> int:
    """Composes growing summaries straight from F_0 and F_1."""
    older, newer = (letter_summary(seed, query.pattern) for seed in _SEEDS)
    if query.index_n == 0:
        return older.count
    for _ in range(2, query.index_n + 1):
        older, newer = newer, summary_concat_growing(newer, older, query.pattern)
    return newer.count


def count(query: FibQuery, mode: Mode = "algebraic", cap: Optional[int] = None) -> int:
    """Dispatches to one of the four strategies."""
    logger.info("[fibcount] %s mode, |S|=%d, n=%d", mode, len(query.pattern), query.index_n)
    if mode == "algebraic":
        return count_occurrences(query)
    if mode == "growing":
        return count_occurrences_growing(query)
    if mode == "stream":
        return stream_count(query, cap=cap)
    if mode == "naive":
        return scan_count(build_explicit(query.index_n, cap=cap), query.pattern)
    raise ValueError(f"unknown mode {mode!r}")
