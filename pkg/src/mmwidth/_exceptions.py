"""Exception hierarchy shared by every ``mmwidth`` package.

Each class doubles as the matching standard-library exception where one
exists, so callers can catch ``ValueError`` or ``LookupError`` without
importing anything from here.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from collections.abc import Mapping
    from typing import Any

__all__ = [
    "BudgetExceededError",
    "Graph6ParseError",
    "GroundSetTooLargeError",
    "InvalidInputError",
    "InvariantViolationError",
    "MMWidthError",
    "NotFoundError",
    "ResourceLimitError",
    "UnsupportedError",
    "VerificationError",
]


class MMWidthError(Exception):
    """Base class of every error raised by ``mmwidth``."""


class InvalidInputError(ValueError, MMWidthError):
    """An argument violates a documented precondition."""


class NotFoundError(LookupError, MMWidthError):
    """A named object (graph, family, file entry) does not exist."""


class Graph6ParseError(InvalidInputError):
    """Malformed graph6 text.

    Parameters
    ----------
    why : str
        Description of the problem.
    offset : int
        Byte offset of the first offending character.
    """

    def __init__(self, why: str, offset: int) -> None:
        super().__init__(f"graph6 parse error at byte {offset}: {why}")
        self.why = why
        self.offset = offset


class UnsupportedError(MMWidthError):
    """The request is well formed but outside what is implemented."""


class GroundSetTooLargeError(UnsupportedError):
    """An exact computation was asked for on a ground set above its cap.

    Parameters
    ----------
    what : str
        The computation that refused to run.
    size : int
        Requested ground-set size.
    limit : int
        Largest accepted size.
    """

    def __init__(self, what: str, size: int, limit: int) -> None:
        super().__init__(
            f"Cannot run {what}: ground set has {size} elements, limit is {limit}"
        )
        self.what = what
        self.size = size
        self.limit = limit


class ResourceLimitError(MMWidthError):
    """A candidate could neither be pruned nor computed exactly."""


class BudgetExceededError(MMWidthError):
    """A bounded search ran out of budget before reaching a verdict.

    Parameters
    ----------
    what : str
        The search that was interrupted.
    budget : int
        The node budget that was exhausted.
    """

    def __init__(self, what: str, budget: int) -> None:
        super().__init__(f"{what} exceeded its budget of {budget} node expansions")
        self.what = what
        self.budget = budget


class InvariantViolationError(RuntimeError, MMWidthError):
    """Internal consistency check failed; the result cannot be trusted."""


class VerificationError(MMWidthError):
    """A stored or computed certificate failed re-verification.

    Parameters
    ----------
    message : str
        Summary of the failure.
    report : Mapping[str, Any] | None
        Structured details, serialisable to JSON.
    """

    def __init__(self, message: str, report: Mapping[str, Any] | None = None) -> None:
        super().__init__(message)
        self.report = dict(report or {})
