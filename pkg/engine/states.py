"""
states.py
=========
Pydantic models for the three engines:

  poly-algebra  ->  Term, Polynomial
  fib-string    ->  FibQuery, OccurrenceSummary
  tree-layout   ->  TreeNode, WidthTriple, NodePlacement, Layout

All models are frozen; engines return new values instead of mutating.
"""

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

INT64_MIN = -(2 ** 63)
INT64_MAX = 2 ** 63 - 1

MAX_PATTERN_LENGTH = 20
MAX_INDEX = 50


# ─────────────────────────────────────────────────────────────────────────────
# poly-algebra
# ─────────────────────────────────────────────────────────────────────────────

class Term(BaseModel):
    """
    One monomial coeff * x^xexp * y^yexp, the (c, x, y) triple.
    Exponent 0 means the variable is absent.
    """
    model_config = ConfigDict(frozen=True)

    coeff: int = Field(description="Signed coefficient, fits in 64 bits")
    xexp: int = Field(0, ge=0, description="Exponent of x")
    yexp: int = Field(0, ge=0, description="Exponent of y")

    @property
    def has_variable(self) -> bool:
        return self.xexp > 0 or self.yexp > 0

    def as_tuple(self) -> tuple[int, int, int]:
        return self.coeff, self.xexp, self.yexp


class Polynomial(BaseModel):
    """
    A finite sequence of terms. Canonical when merged, zero-free and sorted by
    descending x exponent then descending y exponent; raw otherwise.
    """
    model_config = ConfigDict(frozen=True)

    terms: tuple[Term, ...] = Field(default=(), description="Terms in stored order")

    @classmethod
    def from_tuples(cls, triples) -> "Polynomial":
        return cls(terms=tuple(Term(coeff=c, xexp=x, yexp=y) for c, x, y in triples))

    def as_tuples(self) -> list[tuple[int, int, int]]:
        return [t.as_tuple() for t in self.terms]

    @property
    def is_zero(self) -> bool:
        return not self.terms


# ─────────────────────────────────────────────────────────────────────────────
# fib-string
# ─────────────────────────────────────────────────────────────────────────────

class FibQuery(BaseModel):
    """How many times does `pattern` occur in F_{index_n}?"""
    model_config = ConfigDict(frozen=True)

    pattern: str = Field(min_length=1, max_length=MAX_PATTERN_LENGTH)
    index_n: int = Field(ge=0, le=MAX_INDEX)

    @field_validator("pattern")
    @classmethod
    def _printable(cls, value: str) -> str:
        if not value.isprintable():
            raise ValueError("pattern must contain printable characters only")
        return value


class OccurrenceSummary(BaseModel):
    """
    Stand-in for a whole string: its first and last |S|-1 characters and the
    number of occurrences of S inside it.
    """
    model_config = ConfigDict(frozen=True)

    prefix: str = Field(description="At most |S|-1 leading characters")
    count: int = Field(ge=0, description="Occurrences of S, overlapping ones included")
    suffix: str = Field(description="At most |S|-1 trailing characters")

    def is_saturated(self, pattern: str) -> bool:
        keep = len(pattern) - 1
        return len(self.prefix) == keep and len(self.suffix) == keep


# ─────────────────────────────────────────────────────────────────────────────
# tree-layout
# ─────────────────────────────────────────────────────────────────────────────

class TreeNode(BaseModel):
    """A labeled strict-binary tree node: a leaf or a node with two children."""
    model_config = ConfigDict(frozen=True)

    label: str = Field(min_length=1)
    left: Optional["TreeNode"] = None
    right: Optional["TreeNode"] = None

    @field_validator("label")
    @classmethod
    def _plain_label(cls, value: str) -> str:
        if any(ch.isspace() or ch in "()" for ch in value):
            raise ValueError(f"label {value!r} may not contain whitespace or parentheses")
        return value

    @model_validator(mode="after")
    def _leaf_or_binary(self) -> "TreeNode":
        if (self.left is None) != (self.right is None):
            raise ValueError(f"node {self.label!r} must have zero or two children")
        return self

    @property
    def is_leaf(self) -> bool:
        return self.left is None


class WidthTriple(BaseModel):
    """(esq, mid, dir): left subtree region, central region, right subtree region."""
    model_config = ConfigDict(frozen=True)

    esq: int = Field(0, ge=0)
    mid: int = Field(0, ge=0)
    dir: int = Field(0, ge=0)

    @property
    def width(self) -> int:
        return self.esq + self.mid + self.dir


class NodePlacement(BaseModel):
    """
    Where one node lands on the canvas. `path` is the route from the root
    ("" for the root, then "l"/"r" per step); bar fields are None for leaves.
    """
    model_config = ConfigDict(frozen=True)

    path: str
    label: str
    depth: int = Field(ge=0)
    row: int = Field(ge=0)
    offset: int = Field(ge=0, description="First column of the subtree interval")
    triple: WidthTriple
    label_start_col: int = Field(ge=0)
    bar_row: Optional[int] = None
    bar_left_col: Optional[int] = None
    bar_right_col: Optional[int] = None

    @property
    def is_leaf(self) -> bool:
        return self.bar_row is None

    @property
    def width(self) -> int:
        return self.triple.width

    @property
    def anchor_col(self) -> int:
        """Center of the mid region; parent bars attach here."""
        return self.offset + self.triple.esq + self.triple.mid // 2


class Layout(BaseModel):
    """Placements for every node of one tree, keyed by path in preorder."""
    model_config = ConfigDict(frozen=True)

    kind: Literal["baseline", "compact"]
    placements: dict[str, NodePlacement]

    @property
    def root(self) -> NodePlacement:
        return self.placements[""]

    @property
    def width(self) -> int:
        return self.root.width

    @property
    def max_depth(self) -> int:
        return max(p.depth for p in self.placements.values())

    def at(self, path: str) -> NodePlacement:
        return self.placements[path]


TreeNode.model_rebuild()
