from __future__ import annotations

from mmwidth.minor._ops import is_minor_minimal, mmw_le2_by_obstructions, one_step_minors
from mmwidth.minor._search import (
    DEFAULT_MINOR_BUDGET,
    MinorModel,
    MinorSearch,
    contains_any,
    has_minor,
    verify_model,
)

__all__ = [
    "DEFAULT_MINOR_BUDGET",
    "MinorModel",
    "MinorSearch",
    "contains_any",
    "has_minor",
    "is_minor_minimal",
    "mmw_le2_by_obstructions",
    "one_step_minors",
    "verify_model",
]
