"""Root test configuration for mmwidth.

Defines the ``slow`` marker and skips acceptance-scale tests (catalog
regeneration, grid(4), large sweeps) unless ``MMW_RUN_SLOW=1``.
"""

from __future__ import annotations

import os

import pytest

from mmwidth.config import Settings
from mmwidth.graph import Graph, complete, cycle, grid, named


def _run_slow() -> bool:
    return os.environ.get("MMW_RUN_SLOW") == "1"


_SKIP_SLOW = pytest.mark.skip(reason="acceptance-scale test; set MMW_RUN_SLOW=1 to run")


def pytest_collection_modifyitems(items: list[pytest.Item]) -> None:
    """Auto-skip @pytest.mark.slow tests unless explicitly requested."""
    if _run_slow():
        return
    for item in items:
        if item.get_closest_marker("slow"):
            item.add_marker(_SKIP_SLOW)


@pytest.fixture
def k6() -> Graph:
    return complete(6)


@pytest.fixture
def c4() -> Graph:
    return cycle(4)


@pytest.fixture
def grid3() -> Graph:
    return grid(3)


@pytest.fixture
def prism() -> Graph:
    return named("prism")


@pytest.fixture
def settings() -> Settings:
    return Settings()
