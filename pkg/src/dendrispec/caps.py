"""Capacity guards, overridable through the DENDRISPEC_MAX_N variable.

Each guarded operation has a generous default cap so that accidental
requests for astronomically large trees fail fast instead of exhausting
memory.  Setting DENDRISPEC_MAX_N replaces every default at once; explicit
cap arguments on the operations themselves always win.
"""

from __future__ import annotations

import os

from .errors import ValidationError

ENV_CAP_VARIABLE = "DENDRISPEC_MAX_N"

ADJACENCY_VERTEX_CAP = 100_000
EXPAND_DEGREE_CAP = 2_000
CHARPOLY_ORACLE_CAP = 600
EIGENSOLVE_CAP = 2_000


def effective_cap(default: int) -> int:
    """Return the active cap: the override variable when set, else the default."""
    raw = os.environ.get(ENV_CAP_VARIABLE)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValidationError(
            f"{ENV_CAP_VARIABLE} must be an integer, got {raw!r}"
        ) from None
    if value < 1:
        raise ValidationError(f"{ENV_CAP_VARIABLE} must be positive, got {value}")
    return value
