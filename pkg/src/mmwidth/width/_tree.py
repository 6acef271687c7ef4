from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from mmwidth._exceptions import InvalidInputError, InvariantViolationError

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence

__all__ = ["SubcubicTree", "balanced_leaf_edge"]


@dataclass(frozen=True, slots=True)
class SubcubicTree:
    """Tree with maximum degree 3 on nodes ``0..num_nodes-1``.

    Edges are referred to by their index in `edges`.

    Raises
    ------
    InvalidInputError
        If the edges do not form a tree on the nodes or a node has
        degree above 3.
    """

    num_nodes: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.num_nodes < 0:
            raise InvalidInputError("tree cannot have a negative node count")
        if self.num_nodes and len(self.edges) != self.num_nodes - 1:
            raise InvalidInputError(
                f"a tree on {self.num_nodes} nodes has {self.num_nodes - 1} edges, "
                f"got {len(self.edges)}"
            )
        if not self.num_nodes and self.edges:
            raise InvalidInputError("empty tree cannot have edges")
        degree = [0] * self.num_nodes
        seen: set[frozenset[int]] = set()
        for u, v in self.edges:
            if not (0 <= u < self.num_nodes and 0 <= v < self.num_nodes) or u == v:
                raise InvalidInputError(f"invalid tree edge ({u}, {v})")
            key = frozenset((u, v))
            if key in seen:
                raise InvalidInputError(f"repeated tree edge ({u}, {v})")
            seen.add(key)
            degree[u] += 1
            degree[v] += 1
        if any(d > 3 for d in degree):
            raise InvalidInputError("tree node of degree above 3")
        if self.num_nodes and len(self._reach(0, -1)) != self.num_nodes:
            raise InvalidInputError("tree is not connected")

    @classmethod
    def from_edges(cls, edges: Iterable[Sequence[int]], num_nodes: int | None = None) -> SubcubicTree:
        pairs = tuple((int(u), int(v)) for u, v in edges)
        if num_nodes is None:
            num_nodes = 1 + max((max(p) for p in pairs), default=0) if pairs else 1
        return cls(num_nodes, pairs)

    def incidence(self) -> list[list[tuple[int, int]]]:
        """``incidence()[x]`` lists ``(neighbor, edge index)`` pairs of node ``x``."""
        inc: list[list[tuple[int, int]]] = [[] for _ in range(self.num_nodes)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append((v, i))
            inc[v].append((u, i))
        return inc

    def degree(self, x: int) -> int:
        """Number of tree edges at node ``x``."""
        return sum(x in e for e in self.edges)

    def degrees(self) -> list[int]:
        degree = [0] * self.num_nodes
        for u, v in self.edges:
            degree[u] += 1
            degree[v] += 1
        return degree

    def leaves(self) -> list[int]:
        """Nodes of degree at most one, in increasing order."""
        return [x for x, d in enumerate(self.degrees()) if d <= 1]

    @property
    def is_strict(self) -> bool:
        """Every node has degree 1 or 3 (a lone node is allowed)."""
        return self.num_nodes <= 1 or all(d in (1, 3) for d in self.degrees())

    def _reach(self, start: int, banned_edge: int) -> set[int]:
        inc = self.incidence()
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y, i in inc[x]:
                if i != banned_edge and y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen

    def far_side(self, edge: int) -> set[int]:
        """Nodes on the second endpoint's side once ``edge`` is removed."""
        return self._reach(self.edges[edge][1], edge)

    def path_edges(self, a: int, b: int) -> list[int]:
        """Edge indices on the unique path from node ``a`` to node ``b``."""
        inc = self.incidence()
        parent: dict[int, tuple[int, int]] = {a: (-1, -1)}
        stack = [a]
        while stack:
            x = stack.pop()
            for y, i in inc[x]:
                if y not in parent:
                    parent[y] = (x, i)
                    stack.append(y)
        out = []
        x = b
        while x != a:
            x, i = parent[x]
            out.append(i)
        return out[::-1]

    def subtree_is_connected(self, edge_set: Iterable[int]) -> bool:
        """Whether the given edges induce a nonempty connected subgraph."""
        chosen = set(edge_set)
        if not chosen:
            return False
        nodes = {x for i in chosen for x in self.edges[i]}
        inc = self.incidence()
        start = next(iter(nodes))
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y, i in inc[x]:
                if i in chosen and y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen == nodes


def _leaf_counts(tree: SubcubicTree) -> dict[tuple[int, int], int]:
    """Leaves beyond ``y`` for every oriented edge ``(x, y)``."""
    inc = tree.incidence()
    leaves = set(tree.leaves())
    memo: dict[tuple[int, int], int] = {}

    def count(x: int, y: int) -> int:
        key = (x, y)
        if key not in memo:
            children = [z for z, _ in inc[y] if z != x]
            memo[key] = (y in leaves) + sum(count(y, z) for z in children)
        return memo[key]

    for u, v in tree.edges:
        count(u, v)
        count(v, u)
    return memo


def balanced_leaf_edge(tree: SubcubicTree) -> int:
    """Edge whose removal leaves at least ``ceil(L/3)`` leaves on each side.

    Starting anywhere, the walk moves toward the side holding more than
    two thirds of the ``L`` leaves, always into the heavier branch.

    Raises
    ------
    InvalidInputError
        If the tree has fewer than two leaves.
    """
    total = len(tree.leaves())
    if total < 2 or not tree.edges:
        raise InvalidInputError("balanced edge needs a tree with at least two leaves")
    counts = _leaf_counts(tree)
    inc = tree.incidence()
    x, y = tree.edges[0]
    if counts[(x, y)] < counts[(y, x)]:
        x, y = y, x
    while 3 * counts[(x, y)] > 2 * total:
        children = sorted((z for z, _ in inc[y] if z != x), key=lambda z: (-counts[(y, z)], z))
        x, y = y, children[0]
    index = next(i for z, i in inc[x] if z == y)
    need = -(-total // 3)
    if counts[(x, y)] < need or total - counts[(x, y)] < need:
        raise InvariantViolationError("balanced edge walk ended on an unbalanced edge")
    return index
