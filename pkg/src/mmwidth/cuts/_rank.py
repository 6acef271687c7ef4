from __future__ import annotations

from typing import TYPE_CHECKING

from mmwidth._exceptions import InvalidInputError
from mmwidth.graph import bits

if TYPE_CHECKING:
    from mmwidth.graph import Graph, VertexSet

__all__ = ["br_cut", "gf2_rank", "rank_cut"]


def gf2_rank(rows: list[int]) -> int:
    """Rank over GF(2) of row vectors packed into integers."""
    basis: dict[int, int] = {}
    for row in rows:
        while row:
            pivot = row.bit_length() - 1
            if pivot not in basis:
                basis[pivot] = row
                break
            row ^= basis[pivot]
    return len(basis)


def rank_cut(g: Graph, side: VertexSet) -> int:
    """GF(2) rank of the ``side x (V - side)`` adjacency submatrix."""
    if side < 0 or side & ~g.vertices:
        raise InvalidInputError("vertex set contains vertices outside the graph")
    other = g.vertices & ~side
    return gf2_rank([g.adj[u] & other for u in bits(side)])


def br_cut(g: Graph, edge_side: int) -> int:
    """Vertices incident both to an edge in ``edge_side`` and to one outside it.

    Bit ``i`` of ``edge_side`` selects ``g.edges()[i]``.
    """
    edges = g.edges()
    if edge_side < 0 or edge_side >> len(edges):
        raise InvalidInputError("edge set contains indices outside the edge list")
    inside = outside = 0
    for i, (u, v) in enumerate(edges):
        if edge_side >> i & 1:
            inside |= 1 << u | 1 << v
        else:
            outside |= 1 << u | 1 << v
    return (inside & outside).bit_count()
