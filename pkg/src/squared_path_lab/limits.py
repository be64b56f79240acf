"""Caps for the exponential exact searches."""

from __future__ import annotations

import os

ENV_VAR = "SPL_EXACT_CAP"
EMBEDDING_CAP = 20
FACTOR_CAP = 24


def exact_cap(default: int) -> int:
    """The cap from ``SPL_EXACT_CAP`` when set, else ``default``."""
    raw = os.environ.get(ENV_VAR)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{ENV_VAR} must be an integer, got {raw!r}") from None
