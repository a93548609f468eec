"""
errors.py
=========
Exception hierarchy shared by the engines, the CLI and the HTTP bridge.

Parse errors carry the 0-based character position of the offending input so
callers can turn it into a line/column diagnostic.
"""


class TextKataError(Exception):
    """Base class for every error raised by the engines."""


class ContractError(TextKataError):
    """A precondition of an engine operation was violated."""


class CapExceededError(ContractError):
    """An oracle mode was asked for an index above its configured cap."""

    def __init__(self, mode: str, index: int, cap: int) -> None:
        self.mode = mode
        self.index = index
        self.cap = cap
        super().__init__(
            f"{mode} mode is capped at n={cap} (asked for n={index}); "
            f"use the algebraic mode or raise the cap"
        )


class ArithmeticOverflowError(TextKataError):
    """A coefficient or exponent left the signed 64-bit range."""


class _PositionedError(TextKataError):
    def __init__(self, position: int, message: str) -> None:
        self.position = position
        self.message = message
        super().__init__(f"at position {position}: {message}")


class PolynomialParseError(_PositionedError):
    """Malformed polynomial text."""


class TreeParseError(_PositionedError):
    """Malformed s-expression."""


class ArityError(TreeParseError):
    """An internal node without exactly two children."""


class CanvasCollisionError(TextKataError):
    """Two different glyphs were written to the same canvas cell."""
