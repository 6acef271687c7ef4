"""Process pool used by the embarrassingly parallel stages.

Results always come back in submission order, so reports are identical
whatever the worker count.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import TYPE_CHECKING, TypeVar

from mmwidth.log import Loggable

if TYPE_CHECKING:
    from collections.abc import Callable, Iterable
    from types import TracebackType

__all__ = ["WorkerPool"]

T = TypeVar("T")
R = TypeVar("R")


class WorkerPool(Loggable):
    """Deterministic map over a process pool.

    Parameters
    ----------
    threads : int
        Number of worker processes. ``threads <= 1`` runs every task
        inline in the calling process and never spawns an executor.
    """

    def __init__(self, threads: int = 1) -> None:
        self.threads = max(1, threads)
        self._executor: ProcessPoolExecutor | None = None

    @property
    def name(self) -> str:
        return f"{self.threads} worker(s)"

    def __enter__(self) -> WorkerPool:
        if self.threads > 1 and self._executor is None:
            self.logger.debug("Starting process pool")
            self._executor = ProcessPoolExecutor(max_workers=self.threads)
        return self

    def __exit__(
        self,
        exc_type: type[BaseException] | None,
        exc: BaseException | None,
        tb: TracebackType | None,
    ) -> None:
        self.shutdown()

    def shutdown(self) -> None:
        """Stop the executor if one is running."""
        if self._executor is not None:
            self._executor.shutdown(wait=True, cancel_futures=True)
            self._executor = None

    def map_ordered(self, fn: Callable[[T], R], items: Iterable[T]) -> list[R]:
        """Apply ``fn`` to every item and return results in input order.

        ``fn`` must be a module-level callable so it can be pickled.
        """
        work = list(items)
        if self._executor is None or len(work) < 2:
            return [fn(item) for item in work]
        chunk = max(1, len(work) // (4 * self.threads))
        return list(self._executor.map(fn, work, chunksize=chunk))
