"""Small sets of the square grid and the sweeps that back the grid tangle.

A vertex set ``X`` of the ``k x k`` grid is *small* when ``mm(X) < k``
and ``X`` contains no full row.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import TYPE_CHECKING

from mmwidth._exceptions import GroundSetTooLargeError, InvalidInputError
from mmwidth.cuts import mm_function
from mmwidth.graph import grid, grid_index

if TYPE_CHECKING:
    from collections.abc import Iterable, Iterator

    from mmwidth.cuts import CutFunction

__all__ = [
    "EXHAUSTIVE_SIDE",
    "SweepReport",
    "column_masks",
    "covering_triple",
    "is_small",
    "row_masks",
    "small_sets",
    "sweep_empty_line",
    "sweep_rows_columns",
    "sweep_small_complement",
    "sweep_small_triples",
]

EXHAUSTIVE_SIDE = 4
"""Largest side whose ``2 ** (k * k)`` subsets are enumerated."""

DEFAULT_SEED = 20160601


@dataclass(frozen=True, slots=True)
class SweepReport:
    """Outcome of a grid sweep; truthy when no counterexample was found."""

    name: str
    k: int
    checked: int
    exhaustive: bool
    counterexample: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.counterexample is None

    def to_json(self) -> dict[str, object]:
        """Plain-data form; sets are hex bitmasks."""
        return {
            "name": self.name,
            "k": self.k,
            "checked": self.checked,
            "exhaustive": self.exhaustive,
            "counterexample": (
                None if self.counterexample is None else [hex(x) for x in self.counterexample]
            ),
        }


def _check_side(k: int) -> None:
    if k < 2:
        raise InvalidInputError(f"grid side must be at least 2, got {k}")


@lru_cache(maxsize=8)
def _grid_mm(k: int) -> CutFunction:
    return mm_function(grid(k), cap=k)


def row_masks(k: int) -> list[int]:
    """Vertex masks of the rows ``R_1 .. R_k``."""
    return [sum(1 << grid_index(i, j, k) for j in range(1, k + 1)) for i in range(1, k + 1)]


def column_masks(k: int) -> list[int]:
    """Vertex masks of the columns ``C_1 .. C_k``."""
    return [sum(1 << grid_index(i, j, k) for i in range(1, k + 1)) for j in range(1, k + 1)]


def _contains_line(x: int, lines: Iterable[int]) -> bool:
    return any(line & ~x == 0 for line in lines)


def is_small(k: int, x: int) -> bool:
    """Whether ``x`` is a small set of the ``k x k`` grid."""
    _check_side(k)
    return _grid_mm(k)(x) < k and not _contains_line(x, row_masks(k))


def _subsets(k: int, samples: int | None, seed: int) -> tuple[Iterator[int], bool]:
    _check_side(k)
    n = k * k
    if samples is None:
        if k > EXHAUSTIVE_SIDE:
            raise GroundSetTooLargeError("exhaustive grid sweep", n, EXHAUSTIVE_SIDE**2)
        return iter(range(1 << n)), True
    rng = random.Random(seed)
    return (rng.getrandbits(n) for _ in range(samples)), False


def sweep_rows_columns(k: int, *, samples: int | None = None, seed: int = DEFAULT_SEED) -> SweepReport:
    """A set with ``mm < k`` contains a full row exactly when it contains a full column."""
    f = _grid_mm(k)
    rows, cols = row_masks(k), column_masks(k)
    checked = 0
    subsets, exhaustive = _subsets(k, samples, seed)
    for x in subsets:
        if f(x) >= k:
            continue
        checked += 1
        if _contains_line(x, rows) != _contains_line(x, cols):
            return SweepReport("rows-columns", k, checked, exhaustive, (x,))
    return SweepReport("rows-columns", k, checked, exhaustive)


def sweep_small_complement(
    k: int, *, samples: int | None = None, seed: int = DEFAULT_SEED
) -> SweepReport:
    """For every set with ``mm < k``, the set or its complement is small."""
    f = _grid_mm(k)
    full = (1 << k * k) - 1
    checked = 0
    subsets, exhaustive = _subsets(k, samples, seed)
    for x in subsets:
        if f(x) >= k:
            continue
        checked += 1
        if not (is_small(k, x) or is_small(k, full ^ x)):
            return SweepReport("small-complement", k, checked, exhaustive, (x,))
    return SweepReport("small-complement", k, checked, exhaustive)


def sweep_empty_line(k: int, *, samples: int | None = None, seed: int = DEFAULT_SEED) -> SweepReport:
    """Every small set misses some row and some column entirely."""
    rows, cols = row_masks(k), column_masks(k)
    checked = 0
    subsets, exhaustive = _subsets(k, samples, seed)
    for x in subsets:
        if not is_small(k, x):
            continue
        checked += 1
        if not (any(r & x == 0 for r in rows) and any(c & x == 0 for c in cols)):
            return SweepReport("empty-line", k, checked, exhaustive, (x,))
    return SweepReport("empty-line", k, checked, exhaustive)


@lru_cache(maxsize=4)
def small_sets(k: int) -> tuple[int, ...]:
    """Every small set of the ``k x k`` grid, the empty set included, in increasing order."""
    _check_side(k)
    if k > EXHAUSTIVE_SIDE:
        raise GroundSetTooLargeError("small-set enumeration", k * k, EXHAUSTIVE_SIDE**2)
    return tuple(x for x in range(1 << k * k) if is_small(k, x))


def covering_triple(members: Iterable[int], full: int) -> tuple[int, int, int] | None:
    """Three members (repetition allowed) whose union is ``full``, if any."""
    ordered = sorted(set(members), key=lambda s: (-s.bit_count(), s))
    for i, s1 in enumerate(ordered):
        for s2 in ordered[i:]:
            rest = full & ~(s1 | s2)
            need = rest.bit_count()
            for s3 in ordered:
                if s3.bit_count() < need:
                    break
                if rest & ~s3 == 0:
                    return s1, s2, s3
    return None


def sweep_small_triples(
    k: int, *, samples: int | None = None, seed: int = DEFAULT_SEED
) -> SweepReport:
    """No three small sets cover the grid.

    Exhaustive over all triples for ``k <= 3``; above that (or when
    ``samples`` is given) triples are drawn at random from the small
    sets.
    """
    family = small_sets(k)
    full = (1 << k * k) - 1
    if samples is None and k <= 3:
        found = covering_triple(family, full)
        pairs = len(family) * (len(family) + 1) // 2
        return SweepReport("small-triples", k, pairs, True, found)
    rng = random.Random(seed)
    count = samples if samples is not None else 100_000
    for checked in range(1, count + 1):
        triple = (rng.choice(family), rng.choice(family), rng.choice(family))
        if triple[0] | triple[1] | triple[2] == full:
            return SweepReport("small-triples", k, checked, False, triple)
    return SweepReport("small-triples", k, count, False)
