"""
server.py
=========
FastAPI bridge exposing the three engines over HTTP.

Start with:
    uv run uvicorn frontend.api.server:app --reload --port 8000
"""

from __future__ import annotations

import pathlib
import sys
from typing import Literal

# ── Make project root importable so `engine.*` can be found ──
_ROOT = pathlib.Path(__file__).resolve().parents[2]
if str(_ROOT) not in sys.path:
    sys.path.insert(0, str(_ROOT))

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from engine import __version__
from engine.errors import TextKataError
from engine.fibstring import count
from engine.polynomial import parse_polynomial, product, render_two_line
from engine.sexpr import parse_tree_sexpr
from engine.states import MAX_INDEX, MAX_PATTERN_LENGTH, FibQuery
from engine.treelayout import compute_layout, render

# ─────────────────────────────────────────────────────────────────────────────
# App
# ─────────────────────────────────────────────────────────────────────────────

app = FastAPI(title="textkata API", version=__version__)

# ─────────────────────────────────────────────────────────────────────────────
# Request / Response schemas
# ─────────────────────────────────────────────────────────────────────────────

class PolymulRequest(BaseModel):
    first: str
    second: str
    strategy: Literal["sorted", "unsorted"] = "sorted"


class PolymulResponse(BaseModel):
    exponent_line: str
    base_line: str
    terms: list[tuple[int, int, int]]


class FibcountRequest(BaseModel):
    pattern: str = Field(min_length=1, max_length=MAX_PATTERN_LENGTH)
    n: int = Field(ge=0, le=MAX_INDEX)
    mode: Literal["algebraic", "stream", "naive", "growing"] = "algebraic"


class FibcountResponse(BaseModel):
    count: int


class TreedrawRequest(BaseModel):
    expression: str
    layout: Literal["baseline", "compact"] = "baseline"
    bars: bool = True


class TreedrawResponse(BaseModel):
    lines: list[str]
    width: int


# ─────────────────────────────────────────────────────────────────────────────
# Routes
# ─────────────────────────────────────────────────────────────────────────────

@app.get("/api/health")
def health():
    return {"status": "ok", "version": __version__}


@app.post("/api/polymul", response_model=PolymulResponse)
def polymul(body: PolymulRequest):
    """Canonical product of two polynomials and its two-line rendering."""
    try:
        result = product(parse_polynomial(body.first), parse_polynomial(body.second), body.strategy)
    except TextKataError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc

    exponent_line, base_line = render_two_line(result)
    return PolymulResponse(
        exponent_line=exponent_line,
        base_line=base_line,
        terms=result.as_tuples(),
    )


@app.post("/api/fibcount", response_model=FibcountResponse)
def fibcount(body: FibcountRequest):
    try:
        value = count(FibQuery(pattern=body.pattern, index_n=body.n), mode=body.mode)
    except (TextKataError, ValueError) as exc:
        # ValueError covers the printable-pattern check on FibQuery
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return FibcountResponse(count=value)


@app.post("/api/treedraw", response_model=TreedrawResponse)
def treedraw(body: TreedrawRequest):
    try:
        root = parse_tree_sexpr(body.expression)
        layout = compute_layout(root, body.layout)
        canvas = render(layout, root, with_bars=body.bars)
    except TextKataError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return TreedrawResponse(lines=canvas.lines(), width=layout.width)
