"""Vertex sets as integer bit masks.

Bit ``i`` of a mask is set when vertex ``i`` belongs to the set.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from collections.abc import Iterable, Iterator

__all__ = [
    "VertexSet",
    "bits",
    "from_bits",
    "full_mask",
    "low_bit",
    "popcount",
    "submasks",
]

VertexSet = int


def full_mask(n: int) -> VertexSet:
    """Mask of ``{0, ..., n-1}``."""
    return (1 << n) - 1


def popcount(mask: VertexSet) -> int:
    """Number of elements of ``mask``."""
    return mask.bit_count()


def low_bit(mask: VertexSet) -> int:
    """Index of the lowest set bit; ``-1`` for the empty mask."""
    return (mask & -mask).bit_length() - 1


def bits(mask: VertexSet) -> Iterator[int]:
    """Yield the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def from_bits(items: Iterable[int]) -> VertexSet:
    mask = 0
    for i in items:
        mask |= 1 << i
    return mask


def submasks(mask: VertexSet) -> Iterator[VertexSet]:
    """Yield every submask of ``mask`` in increasing numeric order, both ends included."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask
