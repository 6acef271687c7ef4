from __future__ import annotations

from typing import TYPE_CHECKING

from mmwidth._exceptions import InvalidInputError
from mmwidth.treerep._rep import TreeRepresentation
from mmwidth.width import SubcubicTree

if TYPE_CHECKING:
    from collections.abc import Hashable, Sequence

__all__ = ["RepBuilder"]

TreeEdge = frozenset[int]


class RepBuilder:
    """Mutable representation used by the surgery and gluing constructions.

    Tree nodes are integers, tree edges are frozensets of two nodes and
    subtrees are keyed by arbitrary hashable vertex names.
    """

    def __init__(self) -> None:
        self.adj: dict[int, set[int]] = {}
        self.sub: dict[Hashable, set[TreeEdge]] = {}
        self._next = 0

    @classmethod
    def from_rep(cls, r: TreeRepresentation, keys: Sequence[Hashable] | None = None) -> RepBuilder:
        """Copy ``r``; vertex ``v`` is stored under ``keys[v]`` when given."""
        builder = cls()
        for _ in range(r.tree.num_nodes):
            builder.new_node()
        for u, v in r.tree.edges:
            builder.connect(u, v)
        for v, sub in enumerate(r.subtrees):
            key = keys[v] if keys is not None else v
            builder.sub[key] = {frozenset(r.tree.edges[i]) for i in sub}
        return builder

    def new_node(self) -> int:
        node = self._next
        self._next += 1
        self.adj[node] = set()
        return node

    def connect(self, u: int, v: int) -> TreeEdge:
        self.adj[u].add(v)
        self.adj[v].add(u)
        return frozenset((u, v))

    def subdivide(self, u: int, v: int) -> int:
        """Insert a node on ``u-v``; subtrees through the edge keep both halves."""
        if v not in self.adj[u]:
            raise InvalidInputError(f"({u}, {v}) is not a tree edge")
        s = self.new_node()
        old = frozenset((u, v))
        self.adj[u].discard(v)
        self.adj[v].discard(u)
        first = self.connect(u, s)
        second = self.connect(s, v)
        for edges in self.sub.values():
            if old in edges:
                edges.discard(old)
                edges.update((first, second))
        return s

    def add_pendant(self, x: int) -> tuple[int, TreeEdge]:
        """Hang a new leaf off ``x``; returns the leaf and its edge."""
        t = self.new_node()
        return t, self.connect(x, t)

    def absorb(self, other: RepBuilder) -> dict[int, int]:
        """Move ``other`` in under fresh node ids; subtrees with equal keys are merged."""
        remap = {node: self.new_node() for node in sorted(other.adj)}
        for node, nbrs in other.adj.items():
            for nbr in nbrs:
                self.adj[remap[node]].add(remap[nbr])
        for key, edges in other.sub.items():
            moved = {frozenset(remap[x] for x in e) for e in edges}
            self.sub.setdefault(key, set()).update(moved)
        return remap

    def identify(self, keep: int, drop: int) -> None:
        """Merge node ``drop`` into ``keep``; the two must not be adjacent."""
        if keep in self.adj[drop]:
            raise InvalidInputError("cannot identify adjacent tree nodes")
        for nbr in self.adj.pop(drop):
            self.adj[nbr].discard(drop)
            self.adj[nbr].add(keep)
            self.adj[keep].add(nbr)
            old = frozenset((drop, nbr))
            new = frozenset((keep, nbr))
            for edges in self.sub.values():
                if old in edges:
                    edges.discard(old)
                    edges.add(new)

    def nodes_of(self, key: Hashable) -> set[int]:
        return {x for e in self.sub[key] for x in e}

    def path(self, a: int, b: int) -> list[TreeEdge]:
        """Tree edges on the path from node ``a`` to node ``b``."""
        parent: dict[int, int] = {a: a}
        stack = [a]
        while stack:
            x = stack.pop()
            for y in self.adj[x]:
                if y not in parent:
                    parent[y] = x
                    stack.append(y)
        out = []
        x = b
        while x != a:
            out.append(frozenset((x, parent[x])))
            x = parent[x]
        return out[::-1]

    def closest_pair(self, first: set[int], second: set[int]) -> tuple[int, int]:
        """Nodes ``x`` in ``first`` and ``y`` in ``second`` at minimum tree distance."""
        dist: dict[int, int] = {}
        origin: dict[int, int] = {}
        frontier = sorted(first)
        for x in frontier:
            dist[x] = 0
            origin[x] = x
        while frontier:
            hits = [x for x in frontier if x in second]
            if hits:
                y = min(hits)
                return origin[y], y
            nxt = []
            for x in frontier:
                for y in sorted(self.adj[x]):
                    if y not in dist:
                        dist[y] = dist[x] + 1
                        origin[y] = origin[x]
                        nxt.append(y)
            frontier = nxt
        raise InvalidInputError("node sets lie in different trees")

    def build(self, keys: Sequence[Hashable]) -> TreeRepresentation:
        """Freeze with vertex ``i`` being ``keys[i]``; nodes and edges renumbered in sorted order."""
        order = sorted(self.adj)
        index = {node: i for i, node in enumerate(order)}
        edges = sorted(
            tuple(sorted((index[u], index[v]))) for u in self.adj for v in self.adj[u] if u < v
        )
        edge_index = {frozenset(e): i for i, e in enumerate(edges)}
        tree = SubcubicTree(len(order), tuple((u, v) for u, v in edges))
        subtrees = []
        for key in keys:
            mapped = set()
            for e in self.sub[key]:
                mapped.add(edge_index[frozenset(index[x] for x in e)])
            subtrees.append(frozenset(mapped))
        return TreeRepresentation(tree, tuple(subtrees))
