from __future__ import annotations

from array import array
from typing import TYPE_CHECKING

from mmwidth._exceptions import InvalidInputError
from mmwidth.cuts._matching import mm_size
from mmwidth.cuts._rank import gf2_rank
from mmwidth.graph import bits

if TYPE_CHECKING:
    from collections.abc import Callable

    from mmwidth.graph import Graph

__all__ = [
    "DENSE_MEMO_LIMIT",
    "CutFunction",
    "br_function",
    "custom_function",
    "mm_function",
    "rank_function",
]

DENSE_MEMO_LIMIT = 20


class CutFunction:
    """Symmetric set function on ``{0..ground_size-1}`` with memoization.

    Values are cached for both a set and its complement. Up to
    ``dense_limit`` elements the cache is a flat byte table indexed by
    mask, above it a dict.

    Parameters
    ----------
    ground_size : int
        Number of ground elements.
    evaluate : Callable[[int], int]
        Uncached evaluation on a mask.
    name : str
        Short identifier used in reports and logs.
    dense_limit : int
        Largest ground set that gets a dense table.
    """

    __slots__ = ("_dense", "_evaluate", "_sparse", "evaluations", "full", "ground_size", "name")

    def __init__(
        self,
        ground_size: int,
        evaluate: Callable[[int], int],
        name: str,
        dense_limit: int = DENSE_MEMO_LIMIT,
    ) -> None:
        self.ground_size = ground_size
        self.full = (1 << ground_size) - 1
        self.name = name
        self.evaluations = 0
        self._evaluate = evaluate
        self._dense: array[int] | None = None
        self._sparse: dict[int, int] = {}
        if ground_size <= dense_limit:
            self._dense = array("b", [-1]) * (1 << ground_size)

    def __call__(self, mask: int) -> int:
        dense = self._dense
        if dense is not None:
            value = dense[mask]
            if value < 0:
                value = self._evaluate(mask)
                self.evaluations += 1
                dense[mask] = value
                dense[self.full ^ mask] = value
            return value
        cached = self._sparse.get(mask)
        if cached is None:
            cached = self._evaluate(mask)
            self.evaluations += 1
            self._sparse[mask] = cached
            self._sparse[self.full ^ mask] = cached
        return cached

    def check_symmetric(self, mask: int) -> bool:
        """Evaluate both sides of ``mask`` without the cache and compare."""
        return self._evaluate(mask) == self._evaluate(self.full ^ mask)

    def __repr__(self) -> str:
        return f"CutFunction({self.name!r}, ground_size={self.ground_size})"


def mm_function(g: Graph, cap: int | None = None, dense_limit: int = DENSE_MEMO_LIMIT) -> CutFunction:
    """Matching cut function ``A -> mm(A)`` of ``g``.

    With ``cap``, values are clipped at ``cap``, which is all a decision
    procedure for width ``cap - 1`` needs.
    """
    name = "mm" if cap is None else f"mm<={cap}"
    return CutFunction(g.n, lambda mask: mm_size(g, mask, cap), name, dense_limit)


def rank_function(g: Graph, dense_limit: int = DENSE_MEMO_LIMIT) -> CutFunction:
    """Cut-rank function of ``g``."""
    adj = g.adj
    full = g.vertices

    def evaluate(mask: int) -> int:
        other = full & ~mask
        return gf2_rank([adj[u] & other for u in bits(mask)])

    return CutFunction(g.n, evaluate, "rank", dense_limit)


def br_function(g: Graph, dense_limit: int = DENSE_MEMO_LIMIT) -> CutFunction:
    """Branch-width connectivity function on the edges of ``g``, in ``g.edges()`` order."""
    ends = [1 << u | 1 << v for u, v in g.edges()]
    full = (1 << len(ends)) - 1

    def evaluate(mask: int) -> int:
        inside = outside = 0
        for i in bits(mask):
            inside |= ends[i]
        for i in bits(full & ~mask):
            outside |= ends[i]
        return (inside & outside).bit_count()

    return CutFunction(len(ends), evaluate, "br", dense_limit)


def custom_function(
    ground_size: int, evaluate: Callable[[int], int], name: str = "custom"
) -> CutFunction:
    """Wrap an arbitrary set function, e.g. for tests of the width engine."""
    if ground_size < 0:
        raise InvalidInputError(f"ground size must be non-negative, got {ground_size}")
    return CutFunction(ground_size, evaluate, name)
