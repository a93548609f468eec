"""
treelayout.py
=============
Terminal layout of strict binary expression trees.

Every node gets a width triple (esq, mid, dir): the width of the region left
of its label, of the central region, and right of it. Triples are combined
bottom-up with one of two operations:

  baseline  T_B ∧ T_C = (ΣT_B, size(label), ΣT_C)
  compact   siblings slide together, one blank column apart, unless the
            parent label is wider than the gap between the children centers

Rows alternate between labels (even) and connector bars (odd):

              *
      |-----------------|
    atan              atan
"""

import logging
from typing import Callable, Iterator, Literal, Optional

from engine.canvas import TextCanvas
from engine.errors import ContractError
from engine.states import Layout, NodePlacement, TreeNode, WidthTriple

logger = logging.getLogger(__name__)

LayoutKind = Literal["baseline", "compact"]

EMPTY = WidthTriple(esq=0, mid=0, dir=0)

Combine = Callable[[WidthTriple, WidthTriple, int], WidthTriple]


def _walk(root: TreeNode) -> Iterator[tuple[TreeNode, str, int]]:
    """(node, path, depth) in preorder, on an explicit stack."""
    pending = [(root, "", 0)]
    while pending:
        node, path, depth = pending.pop()
        yield node, path, depth
        if not node.is_leaf:
            pending.append((node.right, path + "r", depth + 1))
            pending.append((node.left, path + "l", depth + 1))


# ─────────────────────────────────────────────────────────────────────────────
# Rows and widths
# ─────────────────────────────────────────────────────────────────────────────

def fill_rows(root: TreeNode) -> dict[str, int]:
    """Depth of every node, keyed by path."""
    return {path: depth for _, path, depth in _walk(root)}


def subtree_width(root: Optional[TreeNode]) -> int:
    """Width of the whole subtree as one number: left + label + right."""
    if root is None:
        return 0
    return sum(len(node.label) for node, _, _ in _walk(root))


def combine_baseline(left: WidthTriple, right: WidthTriple, label_size: int) -> WidthTriple:
    return WidthTriple(esq=left.width, mid=label_size, dir=right.width)


def combine_compact(left: WidthTriple, right: WidthTriple, label_size: int) -> WidthTriple:
    """
    The parent's mid region spans from the center of the left child to the
    center of the right child, with one blank column between the two
    subtrees, or the label width if that is larger.
    """
    between_centers = (
        (left.mid + 1) // 2 + left.dir + 1 + right.esq + right.mid // 2
    )
    return WidthTriple(
        esq=left.esq + left.mid // 2,
        mid=max(between_centers, label_size),
        dir=(right.mid + 1) // 2 + right.dir,
    )


def width_triples(root: TreeNode, combine: Combine) -> dict[str, WidthTriple]:
    """Triples for every node, children before parents."""
    triples: dict[str, WidthTriple] = {}
    # reversed preorder visits both children before their parent
    for node, path, _ in reversed(list(_walk(root))):
        if node.is_leaf:
            # absent children are EMPTY; either combine turns a leaf into (0, size, 0)
            triples[path] = combine(EMPTY, EMPTY, len(node.label))
        else:
            triples[path] = combine(triples[path + "l"], triples[path + "r"], len(node.label))
    return triples


# ─────────────────────────────────────────────────────────────────────────────
# Column assignment
# ─────────────────────────────────────────────────────────────────────────────

def _baseline_bars(offset: int, label_size: int, left: WidthTriple, right: WidthTriple) -> tuple[int, int]:
    b_e = offset + left.esq + left.mid // 2
    b_d = offset + left.width + label_size + right.esq + right.mid // 2
    return b_e, b_d


def _compact_bars(offset: int, triple: WidthTriple) -> tuple[int, int]:
    return offset + triple.esq, offset + triple.esq + triple.mid


def _place(
    root: TreeNode,
    kind: LayoutKind,
    triples: dict[str, WidthTriple],
    depths: dict[str, int],
) -> dict[str, NodePlacement]:
    placements: dict[str, NodePlacement] = {}
    pending: list[tuple[TreeNode, str, int]] = [(root, "", 0)]

    while pending:
        node, path, offset = pending.pop()
        triple = triples[path]
        depth = depths[path]
        bars: tuple[Optional[int], Optional[int]] = (None, None)
        label_start = offset + triple.esq

        if not node.is_leaf:
            left, right = triples[path + "l"], triples[path + "r"]
            if kind == "baseline":
                bars = _baseline_bars(offset, len(node.label), left, right)
                right_offset = offset + triple.esq + triple.mid
            else:
                bars = _compact_bars(offset, triple)
                label_start = bars[0] + (triple.mid + 1 - len(node.label)) // 2
                right_offset = offset + triple.width - right.width
            pending.append((node.right, path + "r", right_offset))
            pending.append((node.left, path + "l", offset))

        placements[path] = NodePlacement(
            path=path,
            label=node.label,
            depth=depth,
            row=2 * depth,
            offset=offset,
            triple=triple,
            label_start_col=label_start,
            bar_row=None if node.is_leaf else 2 * depth + 1,
            bar_left_col=bars[0],
            bar_right_col=bars[1],
        )

    return placements


def compute_layout(root: TreeNode, kind: LayoutKind = "baseline") -> Layout:
    combine = combine_baseline if kind == "baseline" else combine_compact
    layout = Layout(
        kind=kind,
        placements=_place(root, kind, width_triples(root, combine), fill_rows(root)),
    )
    logger.debug("[treedraw] %s layout: width=%d depth=%d", kind, layout.width, layout.max_depth)
    return layout


def compute_layout_baseline(root: TreeNode) -> Layout:
    """Each subtree keeps its full width; the label sits between the two."""
    return compute_layout(root, "baseline")


def compute_layout_compact(root: TreeNode) -> Layout:
    """
    Minimal-width variant. The left child starts at the parent's offset and
    the right child is right-aligned to the parent's interval; the label is
    centered over the bar, leaning left on ties.
    """
    return compute_layout(root, "compact")


def bar_endpoints(layout: Layout, path: str = "") -> tuple[int, int]:
    """(b_e, b_d) of the internal node at `path`."""
    try:
        placement = layout.at(path)
    except KeyError:
        raise ContractError(f"no node at path {path!r}") from None
    if placement.is_leaf:
        raise ContractError(f"leaf {placement.label!r} has no bar")
    return placement.bar_left_col, placement.bar_right_col


# ─────────────────────────────────────────────────────────────────────────────
# Rendering
# ─────────────────────────────────────────────────────────────────────────────

def render(layout: Layout, root: TreeNode, with_bars: bool = True) -> TextCanvas:
    """
    Writes every label of `root` at its placement. With bars, each internal
    node's bar row gets '|' at both ends and '-' between them; without bars
    the bar rows are dropped so each tree level is one line.
    """
    levels = layout.max_depth + 1
    height = 2 * levels - 1 if with_bars else levels
    canvas = TextCanvas(height, layout.width)

    for node, path, _ in _walk(root):
        try:
            placement = layout.at(path)
        except KeyError:
            raise ContractError(f"layout has no placement for node {node.label!r} at {path!r}") from None
        row = placement.row if with_bars else placement.depth
        canvas.write(row, placement.label_start_col, node.label)
        if with_bars and not node.is_leaf:
            b_e, b_d = placement.bar_left_col, placement.bar_right_col
            canvas.write(placement.bar_row, b_e, "|" + "-" * (b_d - b_e - 1) + "|")

    return canvas


def draw(root: TreeNode, kind: LayoutKind = "baseline", with_bars: bool = True) -> list[str]:
    """Layout plus render, as trimmed lines."""
    return render(compute_layout(root, kind), root, with_bars).lines()
