"""
limits.py
=========
Configuration for the Fibonacci-string oracle modes.

The caps live in limits.json next to this module and are validated once per
process. Every engine entry point that honours a cap also accepts a `cap=`
keyword that wins over the file.
"""

import json
import pathlib
from functools import lru_cache

from pydantic import BaseModel, Field

from engine.states import MAX_INDEX

LIMITS_PATH = pathlib.Path(__file__).parent / "limits.json"


class Limits(BaseModel):
    explicit_max_n: int = Field(
        40, ge=0, le=MAX_INDEX,
        description="Largest n for which F_n is built as an explicit string",
    )
    stream_max_n: int = Field(
        35, ge=0, le=MAX_INDEX,
        description="Largest n the streaming walk will traverse",
    )


@lru_cache(maxsize=1)
def load_limits() -> Limits:
    """Reads limits.json; missing keys fall back to the model defaults."""
    if not LIMITS_PATH.exists():
        return Limits()
    return Limits.model_validate(json.loads(LIMITS_PATH.read_text(encoding="utf-8")))
