"""
canvas.py
=========
A fixed-size grid of characters that refuses to overwrite a glyph with a
different one. Rendering bugs surface as CanvasCollisionError instead of
silently garbled output.
"""

from engine.errors import CanvasCollisionError, ContractError

BLANK = " "


class TextCanvas:
    """Row-major, space-filled grid."""

    def __init__(self, height: int, width: int) -> None:
        if height < 0 or width < 0:
            raise ContractError(f"canvas size must be non-negative, got {height}x{width}")
        self.height = height
        self.width = width
        self._cells = [[BLANK] * width for _ in range(height)]

    def write(self, row: int, col: int, text: str) -> None:
        if not 0 <= row < self.height or col < 0 or col + len(text) > self.width:
            raise ContractError(
                f"{text!r} at ({row}, {col}) falls outside the {self.height}x{self.width} canvas"
            )
        cells = self._cells[row]
        for offset, glyph in enumerate(text):
            current = cells[col + offset]
            if current != BLANK and current != glyph:
                raise CanvasCollisionError(
                    f"cell ({row}, {col + offset}) holds {current!r}, refusing {glyph!r}"
                )
            cells[col + offset] = glyph

    def read(self, row: int, col: int, length: int) -> str:
        return "".join(self._cells[row][col:col + length])

    def lines(self) -> list[str]:
        """Every row with trailing blanks trimmed."""
        return ["".join(cells).rstrip() for cells in self._cells]

    def __str__(self) -> str:
        return "\n".join(self.lines())
