"""Dense-dimension budget guard.

Every constructor that materializes a matrix of dimension growing like d**M
calls :func:`check_budget` first. The cap is read from the environment on
each call so test harnesses and the CLI can tighten or relax it per run.
"""

import os

from .errors import ResourceBudgetError

ENV_MAX_DIM = "TRANCLONE_MAX_DIM"
DEFAULT_MAX_DIM = 2048


def max_dim() -> int:
    """Current cap on the largest dense matrix dimension."""
    raw = os.environ.get(ENV_MAX_DIM)
    if raw is None:
        return DEFAULT_MAX_DIM
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"{ENV_MAX_DIM} must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ValueError(f"{ENV_MAX_DIM} must be positive, got {value}")
    return value


def check_budget(dim: int, what: str = "operator") -> None:
    """Raise ResourceBudgetError if a dim x dim dense matrix is over budget."""
    cap = max_dim()
    if dim > cap:
        raise ResourceBudgetError(
            f"{what} of dimension {dim} exceeds the budget {cap} "
            f"(set {ENV_MAX_DIM} to raise it)"
        )
