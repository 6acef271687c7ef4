from importlib.metadata import PackageNotFoundError, version

from mmwidth._exceptions import (
    BudgetExceededError,
    Graph6ParseError,
    GroundSetTooLargeError,
    InvalidInputError,
    InvariantViolationError,
    MMWidthError,
    NotFoundError,
    ResourceLimitError,
    UnsupportedError,
    VerificationError,
)
from mmwidth.config import Settings, resolve_config
from mmwidth.graph import Graph, graph6_decode, graph6_encode, grid, named
from mmwidth.width import mmw, mmw_at_most

try:
    __version__ = version("mmwidth")
except PackageNotFoundError:
    __version__ = "unknown"

__all__ = [
    "BudgetExceededError",
    "Graph",
    "Graph6ParseError",
    "GroundSetTooLargeError",
    "InvalidInputError",
    "InvariantViolationError",
    "MMWidthError",
    "NotFoundError",
    "ResourceLimitError",
    "Settings",
    "UnsupportedError",
    "VerificationError",
    "__version__",
    "graph6_decode",
    "graph6_encode",
    "grid",
    "mmw",
    "mmw_at_most",
    "named",
    "resolve_config",
]
