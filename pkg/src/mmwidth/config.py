"""Solver configuration.

Settings come from, in increasing priority: built-in defaults, a YAML
file (explicit path or the per-user config file), and the ``MMW_BUDGET``
environment variable for the minor-search budget.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace
from pathlib import Path
from typing import TYPE_CHECKING

import platformdirs
import yaml
from typing_extensions import NotRequired, Required, TypedDict

if TYPE_CHECKING:
    from typing import Any

__all__ = [
    "BUDGET_ENV",
    "Settings",
    "SolverConfig",
    "default_config_path",
    "load_config",
    "resolve_config",
]

BUDGET_ENV = "MMW_BUDGET"


class SolverConfig(TypedDict, total=False):
    """Schema of the YAML solver configuration file."""

    schema_version: Required[float]
    """Configuration schema version."""

    threads: NotRequired[int]
    """Worker processes for embarrassingly parallel stages."""

    dp_max_ground: NotRequired[int]
    """Largest ground set the exact DP accepts without an override."""

    dp_hard_max: NotRequired[int]
    """Largest ground set the exact DP accepts with an override."""

    dense_memo_limit: NotRequired[int]
    """Largest ground set whose cut values are memoized in a dense table."""

    minor_budget: NotRequired[int]
    """Node-expansion budget of a single minor search."""

    tangle_max_ground: NotRequired[int]
    """Largest ground set for exhaustive tangle verification."""

    sample_seed: NotRequired[int]
    """Seed of the random sample used by the small-graph cross-check."""


@dataclass(frozen=True, slots=True)
class Settings:
    """Resolved solver settings."""

    threads: int = 1
    dp_max_ground: int = 16
    dp_hard_max: int = 20
    dense_memo_limit: int = 20
    minor_budget: int = 2_000_000
    tangle_max_ground: int = 20
    sample_seed: int = 20160601

    @classmethod
    def from_config(cls, data: SolverConfig) -> Settings:
        """Build settings from a validated configuration mapping.

        Unknown keys are ignored; ``schema_version`` is not a setting.
        """
        known = {k: v for k, v in data.items() if k in cls.__dataclass_fields__}
        for key, value in known.items():
            if not isinstance(value, int) or value < 0:
                raise ValueError(
                    f"Configuration key {key!r} must be a non-negative integer, "
                    f"got {value!r}"
                )
        settings = cls(**known)
        if settings.dp_max_ground > settings.dp_hard_max:
            raise ValueError("dp_max_ground cannot exceed dp_hard_max")
        return settings


def default_config_path() -> Path:
    """Return the per-user configuration file location."""
    return platformdirs.user_config_path("mmwidth") / "config.yaml"


def load_config(path: Path) -> SolverConfig:
    """Load a YAML file and validate required keys against `SolverConfig`.

    Raises
    ------
    TypeError
        If the top level of the file is not a mapping.
    KeyError
        If a required key is missing.
    """
    with open(path) as fh:
        data: Any = yaml.safe_load(fh)
    if not isinstance(data, dict):
        raise TypeError(
            f"Expected a YAML mapping at top level in {path}, got {type(data).__name__}"
        )
    missing = SolverConfig.__required_keys__ - data.keys()
    if missing:
        raise KeyError(
            f"Configuration file {path} is missing required keys: "
            f"{', '.join(sorted(missing))}"
        )
    cfg: SolverConfig = data  # type: ignore[assignment]
    return cfg


def resolve_config(path: Path | None = None) -> Settings:
    """Resolve the effective settings.

    Parameters
    ----------
    path : Path | None
        Explicit configuration file. When ``None``, the per-user file is
        read if it exists.

    Returns
    -------
    Settings
        Defaults overridden by the file, then by ``MMW_BUDGET``.
    """
    if path is None:
        candidate = default_config_path()
        path = candidate if candidate.is_file() else None
    settings = Settings.from_config(load_config(path)) if path else Settings()
    budget = os.environ.get(BUDGET_ENV)
    if budget:
        try:
            value = int(budget)
        except ValueError as exc:
            raise ValueError(f"{BUDGET_ENV} must be an integer, got {budget!r}") from exc
        settings = replace(settings, minor_budget=value)
    return settings
