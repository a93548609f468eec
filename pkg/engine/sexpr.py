"""
sexpr.py
========
Reads expression trees written as s-expressions:

    x                          a leaf
    (+ x zz)                   an internal node and its two children
    (* (atan a b) (atan c d))  nesting, newlines allowed

Only strict binary trees are accepted.
"""

import re
from typing import Optional

from engine.errors import ArityError, TreeParseError
from engine.states import TreeNode

_TOKEN_RE = re.compile(r"[()]|[^\s()]+")


class _TreeReader:
    """
    Shift-reduce reader over (token, position) pairs. Open nodes wait on an
    explicit stack, so nesting depth is bounded by memory, not the call stack.
    """

    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens = [(m.group(), m.start()) for m in _TOKEN_RE.finditer(text)]
        self.index = 0

    def _peek(self) -> Optional[tuple[str, int]]:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def _next(self, expected: str) -> tuple[str, int]:
        token = self._peek()
        if token is None:
            raise TreeParseError(len(self.text), f"unbalanced parentheses: {expected}")
        self.index += 1
        return token

    def read(self) -> TreeNode:
        if not self.tokens:
            raise TreeParseError(0, "empty input")

        # (label, position of its '(', children read so far)
        open_nodes: list[tuple[str, int, list[TreeNode]]] = []
        while True:
            if open_nodes and self._peek() is None:
                raise TreeParseError(
                    len(self.text), f"unbalanced parentheses: {open_nodes[-1][0]!r} is never closed"
                )
            token, pos = self._next("expected a label or '('")

            if token == "(":
                label, label_pos = self._next("expected a label after '('")
                if label in "()":
                    raise TreeParseError(label_pos, "empty label")
                open_nodes.append((label, pos, []))
                continue

            if token == ")":
                if not open_nodes:
                    raise TreeParseError(pos, "unexpected ')'")
                label, open_pos, children = open_nodes.pop()
                if len(children) != 2:
                    raise ArityError(
                        open_pos, f"node {label!r} has {len(children)} children; exactly 2 are required"
                    )
                node = TreeNode(label=label, left=children[0], right=children[1])
            else:
                node = TreeNode(label=token)

            if not open_nodes:
                break
            open_nodes[-1][2].append(node)

        trailing = self._peek()
        if trailing is not None:
            raise TreeParseError(trailing[1], f"unexpected {trailing[0]!r} after the tree")
        return node


def parse_tree_sexpr(text: str) -> TreeNode:
    """Parses one s-expression into a TreeNode."""
    return _TreeReader(text).read()
