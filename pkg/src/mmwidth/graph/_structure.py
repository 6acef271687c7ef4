from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import TYPE_CHECKING

import networkx as nx

from mmwidth._exceptions import InvalidInputError
from mmwidth.graph._bits import bits, from_bits, low_bit
from mmwidth.graph._graph import Graph, induced_subgraph

if TYPE_CHECKING:
    from mmwidth.graph._bits import VertexSet

__all__ = [
    "Block",
    "blocks",
    "components",
    "is_connected",
    "is_k_connected",
    "to_networkx",
    "two_cuts",
]


def to_networkx(g: Graph) -> nx.Graph:
    """Convert to a :class:`networkx.Graph` on nodes ``0..n-1``."""
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges())
    return nxg


def _reach(g: Graph, start: int, within: VertexSet) -> VertexSet:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & within & ~seen
        seen |= frontier
    return seen


def components(g: Graph, within: VertexSet | None = None) -> list[VertexSet]:
    """Connected components of ``g[within]`` ordered by their lowest vertex."""
    rest = g.vertices if within is None else within
    out = []
    while rest:
        comp = _reach(g, low_bit(rest), rest)
        out.append(comp)
        rest &= ~comp
    return out


def is_connected(g: Graph, within: VertexSet | None = None) -> bool:
    """Whether ``g[within]`` is connected; the empty set counts as connected."""
    mask = g.vertices if within is None else within
    return mask == 0 or _reach(g, low_bit(mask), mask) == mask


def is_k_connected(g: Graph, k: int) -> bool:
    """``|V| >= k`` and deleting any fewer than ``k`` vertices leaves ``g`` connected."""
    if k < 0:
        raise InvalidInputError(f"k must be non-negative, got {k}")
    if g.n < k:
        return False
    full = g.vertices
    for size in range(k):
        for removed in combinations(range(g.n), size):
            if not is_connected(g, full & ~from_bits(removed)):
                return False
    return True


def two_cuts(g: Graph) -> list[tuple[int, int]]:
    """Inclusion-minimal separating pairs ``(a, b)`` with ``a < b``.

    A pair counts when deleting it disconnects ``g`` while deleting
    either vertex alone does not.
    """
    full = g.vertices
    if not is_connected(g):
        return []
    alone = [is_connected(g, full & ~(1 << v)) for v in range(g.n)]
    return [
        (a, b)
        for a, b in combinations(range(g.n), 2)
        if alone[a] and alone[b] and not is_connected(g, full & ~(1 << a) & ~(1 << b))
    ]


@dataclass(frozen=True, slots=True)
class Block:
    """A maximal 2-connected subgraph, a bridge, or an isolated vertex."""

    graph: Graph
    vertices: tuple[int, ...]
    """``vertices[i]`` is the host vertex of block vertex ``i``."""


def blocks(g: Graph) -> list[Block]:
    """Blocks of ``g`` sorted by their vertex tuples; isolated vertices give ``K1`` blocks."""
    nxg = to_networkx(g)
    masks = [from_bits(comp) for comp in nx.biconnected_components(nxg)]
    masks += [1 << v for v in range(g.n) if g.adj[v] == 0]
    out = []
    for mask in masks:
        sub, old = induced_subgraph(g, mask)
        out.append(Block(sub, old))
    out.sort(key=lambda b: b.vertices)
    return out
