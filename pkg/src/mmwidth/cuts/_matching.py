"""Maximum matchings across a vertex bipartition, with König certificates."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from mmwidth._exceptions import InvalidInputError
from mmwidth.graph import bits

if TYPE_CHECKING:
    from mmwidth.graph import Edge, Graph, VertexSet

__all__ = ["MatchingCertificate", "mm_size", "mm_value"]


@dataclass(frozen=True, slots=True)
class MatchingCertificate:
    """Optimality proof for a maximum matching across ``(side, V - side)``.

    A matching and a vertex cover of the cut edges of equal size prove
    each other optimal.
    """

    side: VertexSet
    matching: tuple[Edge, ...]
    """Pairs ``(u, v)`` with ``u`` in ``side`` and ``v`` outside it."""
    cover: VertexSet
    """Vertex cover of every edge crossing the cut."""

    @property
    def size(self) -> int:
        return len(self.matching)

    def verify(self, g: Graph) -> bool:
        """Check the matching, the cover and their equal size against ``g``."""
        other = g.vertices & ~self.side
        used = 0
        for u, v in self.matching:
            if not (self.side >> u & 1 and other >> v & 1 and g.has_edge(u, v)):
                return False
            if used >> u & 1 or used >> v & 1:
                return False
            used |= 1 << u | 1 << v
        for u in bits(self.side):
            if not self.cover >> u & 1 and g.adj[u] & other & ~self.cover:
                return False
        return self.cover.bit_count() == len(self.matching)


def _check_side(g: Graph, side: VertexSet) -> None:
    if side < 0 or side & ~g.vertices:
        raise InvalidInputError("vertex set contains vertices outside the graph")


def _match(
    g: Graph, left: VertexSet, right: VertexSet, cap: int | None
) -> dict[int, int]:
    """Augmenting-path matching from ``left`` into ``right``; returns ``mate[right] = left``."""
    mate: dict[int, int] = {}
    visited = 0

    def augment(u: int) -> bool:
        nonlocal visited
        for v in bits(g.adj[u] & right & ~visited):
            visited |= 1 << v
            if v not in mate or augment(mate[v]):
                mate[v] = u
                return True
        return False

    for u in bits(left):
        if not g.adj[u] & right:
            continue
        visited = 0
        if augment(u) and cap is not None and len(mate) >= cap:
            break
    return mate


def mm_size(g: Graph, side: VertexSet, cap: int | None = None) -> int:
    """Size of a maximum matching across ``(side, V - side)``.

    Parameters
    ----------
    g : Graph
        The host graph.
    side : VertexSet
        One side of the bipartition.
    cap : int | None
        Stop as soon as a matching of this size is found; the return
        value is then ``cap``.
    """
    _check_side(g, side)
    other = g.vertices & ~side
    left, right = (side, other) if side.bit_count() <= other.bit_count() else (other, side)
    return len(_match(g, left, right, cap))


def mm_value(g: Graph, side: VertexSet) -> tuple[int, MatchingCertificate]:
    """Maximum matching across ``(side, V - side)`` with a König cover.

    Returns
    -------
    tuple[int, MatchingCertificate]
        The matching size and its certificate.

    Raises
    ------
    InvalidInputError
        If ``side`` is not a subset of the vertices.
    """
    _check_side(g, side)
    other = g.vertices & ~side
    mate = _match(g, side, other, None)
    matched_left = 0
    for u in mate.values():
        matched_left |= 1 << u

    # alternating reachability from unmatched left vertices
    z_left = 0
    for u in bits(side):
        if not matched_left >> u & 1 and g.adj[u] & other:
            z_left |= 1 << u
    z_right = 0
    frontier = z_left
    while frontier:
        reached = 0
        for u in bits(frontier):
            reached |= g.adj[u] & other
        reached &= ~z_right
        z_right |= reached
        frontier = 0
        for v in bits(reached):
            if v in mate:
                frontier |= 1 << mate[v]
        frontier &= ~z_left
        z_left |= frontier

    boundary = 0
    for u in bits(side):
        if g.adj[u] & other:
            boundary |= 1 << u
    cover = (boundary & ~z_left) | z_right
    matching = tuple(sorted((u, v) for v, u in mate.items()))
    return len(matching), MatchingCertificate(side, matching, cover)
