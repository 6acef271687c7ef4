from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING

from mmwidth._exceptions import InvalidInputError, NotFoundError
from mmwidth.graph._bits import bits, full_mask

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence

    from mmwidth.graph._bits import VertexSet

__all__ = [
    "MAX_VERTICES",
    "Edge",
    "Graph",
    "add_edges",
    "add_vertices",
    "contract_edge",
    "delete_edge",
    "delete_vertex",
    "induced_subgraph",
    "relabel",
]

MAX_VERTICES = 64

Edge = tuple[int, int]


@dataclass(frozen=True, slots=True)
class Graph:
    """Finite simple undirected graph on vertices ``0..n-1``.

    Adjacency is stored as one bit mask per vertex. Instances are
    immutable; every operation returns a new graph.

    Raises
    ------
    InvalidInputError
        If ``n`` is out of range, a self-loop is present or the
        adjacency is not symmetric.
    """

    n: int
    """Number of vertices, at most 64."""

    adj: tuple[int, ...]
    """``adj[v]`` is the neighbor mask of ``v``."""

    label: str | None = field(default=None, compare=False)
    """Display name; not part of equality."""

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise InvalidInputError(
                f"Graphs must have between 0 and {MAX_VERTICES} vertices, got {self.n}"
            )
        if len(self.adj) != self.n:
            raise InvalidInputError("adjacency length does not match vertex count")
        universe = full_mask(self.n)
        for v, nbrs in enumerate(self.adj):
            if nbrs & ~universe:
                raise InvalidInputError(f"vertex {v} has a neighbor out of range")
            if nbrs >> v & 1:
                raise InvalidInputError(f"self-loop at vertex {v}")
            for w in bits(nbrs):
                if not self.adj[w] >> v & 1:
                    raise InvalidInputError(f"edge {v}-{w} is not symmetric")

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[Sequence[int]], label: str | None = None
    ) -> Graph:
        """Build a graph from an edge list; repeated edges collapse."""
        if not 0 <= n <= MAX_VERTICES:
            raise InvalidInputError(
                f"Graphs must have between 0 and {MAX_VERTICES} vertices, got {n}"
            )
        adj = [0] * n
        for edge in edges:
            u, v = edge
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInputError(f"edge ({u}, {v}) is out of range for n={n}")
            if u == v:
                raise InvalidInputError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), label)

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(nbrs.bit_count() for nbrs in self.adj) // 2

    @property
    def vertices(self) -> VertexSet:
        """Mask of all vertices."""
        return full_mask(self.n)

    def edges(self) -> list[Edge]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.adj[u] >> v & 1)

    def neighborhood(self, mask: VertexSet) -> VertexSet:
        """Vertices outside ``mask`` adjacent to some vertex of ``mask``."""
        out = 0
        for v in bits(mask):
            out |= self.adj[v]
        return out & ~mask

    def named(self, label: str) -> Graph:
        """Return the same graph with a display label."""
        return Graph(self.n, self.adj, label)

    def __repr__(self) -> str:
        name = f" {self.label!r}" if self.label else ""
        return f"Graph{name}(n={self.n}, m={self.m})"


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise NotFoundError(f"vertex {v} is out of range for n={g.n}")


def _check_edge(g: Graph, e: Sequence[int]) -> tuple[int, int]:
    u, v = e
    _check_vertex(g, u)
    _check_vertex(g, v)
    if not g.has_edge(u, v):
        raise NotFoundError(f"({u}, {v}) is not an edge")
    return (u, v) if u < v else (v, u)


def _drop_bit(mask: int, v: int) -> int:
    """Remove bit ``v`` and shift the higher bits down by one."""
    low = mask & ((1 << v) - 1)
    return low | (mask >> (v + 1) << v)


def delete_vertex(g: Graph, v: int) -> Graph:
    """Remove ``v``; vertices above ``v`` shift down by one."""
    _check_vertex(g, v)
    adj = tuple(_drop_bit(nbrs & ~(1 << v), v) for w, nbrs in enumerate(g.adj) if w != v)
    return Graph(g.n - 1, adj)


def delete_edge(g: Graph, e: Sequence[int]) -> Graph:
    """Copy of ``g`` without the edge ``e``."""
    u, v = _check_edge(g, e)
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(g.n, tuple(adj))


def contract_edge(g: Graph, e: Sequence[int]) -> Graph:
    """Contract ``e = (u, v)`` into its lower endpoint.

    The higher endpoint disappears and the vertices above it shift down
    by one; parallel edges collapse.
    """
    lo, hi = _check_edge(g, e)
    adj = list(g.adj)
    merged = (adj[lo] | adj[hi]) & ~(1 << lo) & ~(1 << hi)
    adj[lo] = merged
    for w in bits(merged):
        adj[w] = (adj[w] | (1 << lo)) & ~(1 << hi)
    del adj[hi]
    return Graph(g.n - 1, tuple(_drop_bit(nbrs, hi) for nbrs in adj))


def add_vertices(g: Graph, k: int) -> Graph:
    """Append ``k`` isolated vertices numbered ``n..n+k-1``."""
    return Graph(g.n + k, g.adj + (0,) * k)


def add_edges(g: Graph, edges: Iterable[Sequence[int]]) -> Graph:
    """Copy of ``g`` with ``edges`` added."""
    adj = list(g.adj)
    for u, v in edges:
        _check_vertex(g, u)
        _check_vertex(g, v)
        if u == v:
            raise InvalidInputError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(g.n, tuple(adj))


def induced_subgraph(g: Graph, mask: VertexSet) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced on ``mask``.

    Returns
    -------
    tuple[Graph, tuple[int, ...]]
        The subgraph, whose vertex ``i`` is original vertex ``old[i]``,
        and the map ``old``.
    """
    if mask & ~g.vertices:
        raise InvalidInputError("mask contains vertices outside the graph")
    old = tuple(bits(mask))
    index = {v: i for i, v in enumerate(old)}
    adj = []
    for v in old:
        nbrs = 0
        for w in bits(g.adj[v] & mask):
            nbrs |= 1 << index[w]
        adj.append(nbrs)
    return Graph(len(old), tuple(adj)), old


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Rename vertex ``v`` to ``perm[v]``; ``perm`` must be a permutation."""
    if sorted(perm) != list(range(g.n)):
        raise InvalidInputError("relabelling is not a permutation of the vertices")
    return Graph.from_edges(g.n, ((perm[u], perm[v]) for u, v in g.edges()), g.label)
