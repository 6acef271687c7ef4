from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Any

import networkx as nx

from mmwidth._exceptions import InvalidInputError
from mmwidth.graph import Graph, to_networkx
from mmwidth.width import SubcubicTree

if TYPE_CHECKING:
    from collections.abc import Iterable, Mapping, Sequence

__all__ = [
    "RepReport",
    "TreeRepresentation",
    "contract_rep",
    "intersection_graph",
    "is_chordal",
    "pad_degree_two",
    "verify",
]


@dataclass(frozen=True, slots=True)
class TreeRepresentation:
    """A subcubic tree with one nontrivial subtree per graph vertex.

    Subtrees are sets of tree-edge indices. Adjacent graph vertices need
    subtrees sharing at least one tree node; the width is the largest
    number of subtrees through a single tree edge.

    Raises
    ------
    InvalidInputError
        If a subtree is empty, uses an unknown edge or is disconnected.
    """

    tree: SubcubicTree
    subtrees: tuple[frozenset[int], ...]
    """``subtrees[v]`` holds the tree edges of vertex ``v``."""

    def __post_init__(self) -> None:
        count = len(self.tree.edges)
        for v, sub in enumerate(self.subtrees):
            if not sub:
                raise InvalidInputError(f"subtree of vertex {v} has no edge")
            if any(not 0 <= i < count for i in sub):
                raise InvalidInputError(f"subtree of vertex {v} uses an unknown tree edge")
            if not self.tree.subtree_is_connected(sub):
                raise InvalidInputError(f"subtree of vertex {v} is not connected")

    @classmethod
    def from_edge_sets(
        cls, tree: SubcubicTree, subtrees: Iterable[Iterable[int]]
    ) -> TreeRepresentation:
        return cls(tree, tuple(frozenset(s) for s in subtrees))

    @property
    def num_vertices(self) -> int:
        return len(self.subtrees)

    def loads(self) -> list[int]:
        """Number of subtrees through each tree edge."""
        load = [0] * len(self.tree.edges)
        for sub in self.subtrees:
            for i in sub:
                load[i] += 1
        return load

    @property
    def width(self) -> int:
        return max(self.loads(), default=0)

    def nodes_of(self, v: int) -> frozenset[int]:
        """Tree nodes covered by the subtree of ``v``."""
        return frozenset(x for i in self.subtrees[v] for x in self.tree.edges[i])

    def intersects(self, u: int, v: int) -> bool:
        return not self.nodes_of(u).isdisjoint(self.nodes_of(v))

    def shares_edge(self, u: int, v: int) -> bool:
        return not self.subtrees[u].isdisjoint(self.subtrees[v])

    def to_json(self) -> dict[str, Any]:
        return {
            "tree": {"nodes": self.tree.num_nodes, "edges": [list(e) for e in self.tree.edges]},
            "subtrees": {str(v): sorted(sub) for v, sub in enumerate(self.subtrees)},
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> TreeRepresentation:
        try:
            raw_tree = data["tree"]
            tree = SubcubicTree(
                int(raw_tree["nodes"]), tuple((int(u), int(v)) for u, v in raw_tree["edges"])
            )
            raw = {int(k): [int(i) for i in v] for k, v in data["subtrees"].items()}
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise InvalidInputError(f"malformed tree-representation JSON: {exc}") from exc
        if sorted(raw) != list(range(len(raw))):
            raise InvalidInputError("subtree keys must be the vertices 0..n-1")
        return cls.from_edge_sets(tree, (raw[v] for v in range(len(raw))))


@dataclass(frozen=True, slots=True)
class RepReport:
    """Outcome of `verify`; truthy when the representation is valid."""

    ok: bool
    width: int
    violation: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify(g: Graph, r: TreeRepresentation, k: int | None = None) -> RepReport:
    """Check that ``r`` represents ``g`` with width at most ``k``.

    Parameters
    ----------
    g : Graph
        The represented graph.
    r : TreeRepresentation
        Candidate representation; structural validity is enforced at
        construction.
    k : int | None
        Width bound; ``None`` skips the load check.

    Returns
    -------
    RepReport
        ``ok`` with the first violation found, if any.

    Raises
    ------
    InvalidInputError
        If ``r`` does not have exactly one subtree per vertex of ``g``.
    """
    if r.num_vertices != g.n:
        raise InvalidInputError(
            f"representation has {r.num_vertices} subtrees for a graph on {g.n} vertices"
        )
    width = r.width
    nodes = [r.nodes_of(v) for v in range(g.n)]
    for u, v in g.edges():
        if nodes[u].isdisjoint(nodes[v]):
            return RepReport(False, width, f"subtrees of adjacent vertices {u} and {v} are disjoint")
    if k is not None:
        for i, load in enumerate(r.loads()):
            if load > k:
                return RepReport(False, width, f"tree edge {i} lies in {load} subtrees, bound is {k}")
    return RepReport(True, width)


def contract_rep(r: TreeRepresentation, g: Graph, e: Sequence[int]) -> TreeRepresentation:
    """Representation of ``g / e`` from one of ``g``.

    The merged vertex gets the union of the two subtrees, which is
    connected because adjacent subtrees meet. Vertex numbering follows
    `mmwidth.graph.contract_edge`.

    Raises
    ------
    InvalidInputError
        If ``e`` is not an edge of ``g`` or ``r`` does not represent ``g``.
    """
    u, v = e
    if not g.has_edge(u, v):
        raise InvalidInputError(f"({u}, {v}) is not an edge")
    report = verify(g, r)
    if not report:
        raise InvalidInputError(f"representation does not represent the graph: {report.violation}")
    lo, hi = min(u, v), max(u, v)
    subtrees = list(r.subtrees)
    subtrees[lo] = subtrees[lo] | subtrees[hi]
    del subtrees[hi]
    return TreeRepresentation(r.tree, tuple(subtrees))


def intersection_graph(r: TreeRepresentation) -> Graph:
    """Graph on the subtrees, adjacent when they share a tree node."""
    nodes = [r.nodes_of(v) for v in range(r.num_vertices)]
    edges = [
        (u, v)
        for u in range(r.num_vertices)
        for v in range(u + 1, r.num_vertices)
        if not nodes[u].isdisjoint(nodes[v])
    ]
    return Graph.from_edges(r.num_vertices, edges)


def is_chordal(g: Graph) -> bool:
    """Whether every cycle of length at least four has a chord."""
    return bool(nx.is_chordal(to_networkx(g)))


def pad_degree_two(r: TreeRepresentation) -> TreeRepresentation:
    """Hang an unused leaf edge off every degree-2 node.

    The padded tree has only degree-1 and degree-3 nodes; subtrees and
    loads are unchanged.
    """
    degree = r.tree.degrees()
    padding = []
    next_node = r.tree.num_nodes
    for node, d in enumerate(degree):
        if d == 2:
            padding.append((node, next_node))
            next_node += 1
    if not padding:
        return r
    tree = SubcubicTree(next_node, r.tree.edges + tuple(padding))
    return TreeRepresentation(tree, r.subtrees)
