from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Any

from mmwidth._exceptions import InvalidInputError
from mmwidth.width._tree import SubcubicTree

if TYPE_CHECKING:
    from collections.abc import Callable, Iterator, Mapping, Sequence

__all__ = [
    "BranchDecomposition",
    "TreeBuilder",
    "enumerate_branch_decompositions",
    "width_of",
]


@dataclass(frozen=True, slots=True)
class BranchDecomposition:
    """Subcubic tree whose leaves are in bijection with a ground set.

    Every tree node has degree 1 or 3. Removing a tree edge splits the
    ground set in two; the width for a cut function ``f`` is the maximum
    of ``f`` over these splits.
    """

    tree: SubcubicTree
    leaf_of: tuple[int, ...]
    """``leaf_of[x]`` is the tree node carrying ground element ``x``."""

    def __post_init__(self) -> None:
        if not self.tree.is_strict:
            raise InvalidInputError("branch-decomposition trees need degrees 1 or 3")
        leaves = self.tree.leaves()
        if sorted(self.leaf_of) != leaves:
            raise InvalidInputError("leaves and ground elements are not in bijection")

    @classmethod
    def empty(cls) -> BranchDecomposition:
        return cls(SubcubicTree(0, ()), ())

    @property
    def ground_size(self) -> int:
        return len(self.leaf_of)

    def edge_sides(self) -> list[int]:
        """Ground-element mask on the far side of each tree edge."""
        element = {node: x for x, node in enumerate(self.leaf_of)}
        sides = []
        for i in range(len(self.tree.edges)):
            mask = 0
            for node in self.tree.far_side(i):
                if node in element:
                    mask |= 1 << element[node]
            sides.append(mask)
        return sides

    def width_of(self, f: Callable[[int], int]) -> int:
        """Maximum of ``f`` over the edge splits; 0 when the tree has no edge."""
        size = getattr(f, "ground_size", None)
        if size is not None and size != self.ground_size:
            raise InvalidInputError(
                f"cut function is over {size} elements, decomposition over {self.ground_size}"
            )
        return max((f(side) for side in self.edge_sides()), default=0)

    def to_json(self) -> dict[str, Any]:
        return {
            "nodes": self.tree.num_nodes,
            "edges": [list(e) for e in self.tree.edges],
            "leaf_of": list(self.leaf_of),
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> BranchDecomposition:
        try:
            tree = SubcubicTree(int(data["nodes"]), tuple((int(u), int(v)) for u, v in data["edges"]))
            return cls(tree, tuple(int(x) for x in data["leaf_of"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInputError(f"malformed branch-decomposition JSON: {exc}") from exc

    def to_newick(self) -> str:
        """Parenthesised rendering rooted next to the leaf of element 0."""
        if self.ground_size == 0:
            return "()"
        if self.ground_size == 1:
            return "(0)"
        element = {node: x for x, node in enumerate(self.leaf_of)}
        inc = self.tree.incidence()

        def render(parent: int, node: int) -> tuple[int, str]:
            if node in element:
                return element[node], str(element[node])
            parts = sorted(render(node, child) for child, _ in inc[node] if child != parent)
            return parts[0][0], "(" + ",".join(text for _, text in parts) + ")"

        start = self.leaf_of[0]
        ((hub, _),) = inc[start]
        if hub in element:
            return f"(0,{element[hub]})"
        parts = sorted(render(hub, child) for child, _ in inc[hub] if child != start)
        return "(0," + ",".join(text for _, text in parts) + ")"


def width_of(tree: BranchDecomposition, f: Callable[[int], int]) -> int:
    """Width of ``tree`` under the cut function ``f``."""
    return tree.width_of(f)


class TreeBuilder:
    """Mutable tree used to assemble and edit decompositions.

    Nodes are arbitrary integers; ``leaf`` maps ground elements to nodes.
    """

    def __init__(self) -> None:
        self.adj: dict[int, set[int]] = {}
        self.leaf: dict[int, int] = {}
        self._next = 0

    def new_node(self) -> int:
        node = self._next
        self._next += 1
        self.adj[node] = set()
        return node

    def connect(self, u: int, v: int) -> None:
        self.adj[u].add(v)
        self.adj[v].add(u)

    def disconnect(self, u: int, v: int) -> None:
        self.adj[u].discard(v)
        self.adj[v].discard(u)

    def subdivide(self, u: int, v: int) -> int:
        """Insert a fresh node on edge ``u-v`` and return it."""
        s = self.new_node()
        self.disconnect(u, v)
        self.connect(u, s)
        self.connect(s, v)
        return s

    @classmethod
    def from_decomposition(
        cls, d: BranchDecomposition, relabel: Sequence[int] | None = None
    ) -> TreeBuilder:
        """Copy ``d``; element ``x`` becomes ``relabel[x]`` when given."""
        builder = cls()
        nodes = [builder.new_node() for _ in range(d.tree.num_nodes)]
        for u, v in d.tree.edges:
            builder.connect(nodes[u], nodes[v])
        for x, node in enumerate(d.leaf_of):
            builder.leaf[relabel[x] if relabel is not None else x] = nodes[node]
        return builder

    def absorb(self, other: TreeBuilder) -> dict[int, int]:
        """Move the nodes of ``other`` into this builder under fresh ids.

        Returns the map from old to new node ids.
        """
        remap = {node: self.new_node() for node in sorted(other.adj)}
        for node, nbrs in other.adj.items():
            for nbr in nbrs:
                self.adj[remap[node]].add(remap[nbr])
        for x, node in other.leaf.items():
            self.leaf[x] = remap[node]
        other.adj.clear()
        other.leaf.clear()
        return remap

    def remove_leaf(self, element: int) -> None:
        """Delete the leaf of ``element`` and suppress a neighbor left with degree 2."""
        node = self.leaf.pop(element)
        nbrs = self.adj.pop(node)
        for p in nbrs:
            self.adj[p].discard(node)
            if len(self.adj[p]) == 2:
                a, b = sorted(self.adj[p])
                self.disconnect(p, a)
                self.disconnect(p, b)
                del self.adj[p]
                self.connect(a, b)

    def attach_point(self) -> int:
        """A node of degree 0, or a fresh degree-2 node on some edge."""
        for node in sorted(self.adj):
            if not self.adj[node]:
                return node
            return self.subdivide(node, min(self.adj[node]))
        raise InvalidInputError("cannot attach to an empty tree")

    def graft(self, host_element: int, guest: TreeBuilder) -> None:
        """Hang ``guest`` off the leaf edge of ``host_element``."""
        t = guest.attach_point()
        leaf = self.leaf[host_element]
        if self.adj[leaf]:
            (p,) = self.adj[leaf]
            s = self.subdivide(leaf, p)
        else:
            s = leaf
        remap = self.absorb(guest)
        self.connect(s, remap[t])

    def build(self) -> BranchDecomposition:
        """Freeze into a decomposition over elements ``0..len(leaf)-1``."""
        if sorted(self.leaf) != list(range(len(self.leaf))):
            raise InvalidInputError("leaf elements must be 0..n-1")
        order = [self.leaf[x] for x in range(len(self.leaf))]
        placed = set(order)
        order += [node for node in sorted(self.adj) if node not in placed]
        index = {node: i for i, node in enumerate(order)}
        edges = sorted(
            (min(index[u], index[v]), max(index[u], index[v]))
            for u in self.adj
            for v in self.adj[u]
            if index[u] < index[v]
        )
        tree = SubcubicTree(len(order), tuple(edges))
        return BranchDecomposition(tree, tuple(range(len(self.leaf))))


def enumerate_branch_decompositions(n: int) -> Iterator[BranchDecomposition]:
    """Every branch-decomposition of ``{0..n-1}``, ``(2n-5)!!`` of them for ``n >= 3``.

    Element ``k`` is inserted into every edge of each tree over
    ``{0..k-1}``.
    """
    if n < 0:
        raise InvalidInputError(f"ground size must be non-negative, got {n}")
    if n <= 2:
        edges = ((0, 1),) if n == 2 else ()
        yield BranchDecomposition(SubcubicTree(n, edges), tuple(range(n)))
        return
    # leaves are nodes 0..n-1, internal nodes n, n+1, ...
    start = [(0, n), (1, n), (2, n)]

    def grow(k: int, edges: list[tuple[int, int]]) -> Iterator[list[tuple[int, int]]]:
        if k == n:
            yield edges
            return
        s = n + k - 2
        for i, (u, v) in enumerate(edges):
            yield from grow(k + 1, [*edges[:i], *edges[i + 1 :], (u, s), (s, v), (s, k)])

    for edges in grow(3, start):
        tree = SubcubicTree(2 * n - 2, tuple(edges))
        yield BranchDecomposition(tree, tuple(range(n)))
