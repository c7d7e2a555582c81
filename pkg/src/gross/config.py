"""Runtime knobs: grosspower nesting cap and the division term budget.

Defaults come from ``GROSS_MAX_DEPTH`` / ``GROSS_MAX_TERMS`` when set.
"""

from __future__ import annotations

import contextlib
import os

__all__ = ["MAX_DEPTH", "MAX_TERMS", "max_depth", "max_terms", "set_max_depth", "set_max_terms", "limits"]


def _env_int(key: str, default: int) -> int:
    raw = os.environ.get(key)
    if raw is None or raw.strip() == "":
        return default
    value = int(raw)
    if value < 1:
        raise ValueError(f"{key} must be a positive integer, got {raw!r}")
    return value


MAX_DEPTH: int = _env_int("GROSS_MAX_DEPTH", 3)
MAX_TERMS: int = _env_int("GROSS_MAX_TERMS", 32)


def max_depth() -> int:
    return MAX_DEPTH


def max_terms() -> int:
    return MAX_TERMS


def set_max_depth(value: int) -> None:
    global MAX_DEPTH
    if value < 1:
        raise ValueError("max depth must be >= 1")
    MAX_DEPTH = value


def set_max_terms(value: int) -> None:
    global MAX_TERMS
    if value < 1:
        raise ValueError("max terms must be >= 1")
    MAX_TERMS = value


@contextlib.contextmanager
def limits(depth: int | None = None, terms: int | None = None):
    """Temporarily override the limits (restored on exit)."""
    old = (MAX_DEPTH, MAX_TERMS)
    try:
        if depth is not None:
            set_max_depth(depth)
        if terms is not None:
            set_max_terms(terms)
        yield
    finally:
        set_max_depth(old[0])
        set_max_terms(old[1])
