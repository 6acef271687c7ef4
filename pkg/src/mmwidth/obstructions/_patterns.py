"""Good-subdivision patterns over a base graph.

Each edge ``ab`` of the base is kept, or replaced by ``a-c-b`` (``S1``),
``a-c-d-b`` (``S2``) or ``a-c-b`` plus ``a-d-b`` (``S11``). New vertices
touch nothing but their own gadget.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from itertools import product
from typing import TYPE_CHECKING, Any

from mmwidth._exceptions import InvalidInputError
from mmwidth.graph import Graph, automorphisms, graph6_decode, graph6_encode

if TYPE_CHECKING:
    from collections.abc import Iterator, Mapping, Sequence

__all__ = [
    "Op",
    "SubdivisionPattern",
    "all_patterns",
    "apply_pattern",
    "edge_permutations",
    "lower_covers",
    "orbit_key",
    "upper_covers",
]


class Op(IntEnum):
    """Replacement applied to one base edge."""

    NONE = 0
    S1 = 1
    S2 = 2
    S11 = 3

    @property
    def added(self) -> int:
        """Number of vertices the replacement adds."""
        return (0, 1, 2, 2)[self]


_UP: dict[Op, tuple[Op, ...]] = {Op.NONE: (Op.S1,), Op.S1: (Op.S2, Op.S11), Op.S2: (), Op.S11: ()}
_DOWN: dict[Op, Op | None] = {Op.NONE: None, Op.S1: Op.NONE, Op.S2: Op.S1, Op.S11: Op.S1}


def _op_leq(a: Op, b: Op) -> bool:
    return a == b or a == Op.NONE or (a == Op.S1 and b in (Op.S2, Op.S11))


@dataclass(frozen=True, slots=True)
class SubdivisionPattern:
    """One `Op` per base edge, aligned with ``base.edges()``.

    Raises
    ------
    InvalidInputError
        If the number of operations differs from the number of base edges.
    """

    base: Graph
    ops: tuple[Op, ...]

    def __post_init__(self) -> None:
        if len(self.ops) != self.base.m:
            raise InvalidInputError(
                f"pattern has {len(self.ops)} operations for {self.base.m} base edges"
            )

    @classmethod
    def plain(cls, base: Graph) -> SubdivisionPattern:
        """The all-``NONE`` pattern."""
        return cls(base, (Op.NONE,) * base.m)

    @property
    def added(self) -> int:
        return sum(op.added for op in self.ops)

    def dominates(self, other: SubdivisionPattern) -> bool:
        """Edgewise ``other <= self`` in the order ``NONE < S1 < S2`` and ``S1 < S11``."""
        return self.base == other.base and all(
            _op_leq(b, a) for a, b in zip(self.ops, other.ops, strict=True)
        )

    def with_op(self, index: int, op: Op) -> SubdivisionPattern:
        """Copy with the operation on edge ``index`` replaced by ``op``."""
        ops = list(self.ops)
        ops[index] = op
        return SubdivisionPattern(self.base, tuple(ops))

    def to_json(self) -> dict[str, Any]:
        edges = self.base.edges()
        return {
            "base": graph6_encode(self.base),
            "ops": {f"{u}-{v}": op.name for (u, v), op in zip(edges, self.ops, strict=True) if op},
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> SubdivisionPattern:
        try:
            base = graph6_decode(data["base"])
            index = {f"{u}-{v}": i for i, (u, v) in enumerate(base.edges())}
            ops = [Op.NONE] * base.m
            for edge, name in data["ops"].items():
                ops[index[edge]] = Op[name]
        except KeyError as exc:
            raise InvalidInputError(f"malformed pattern: unknown key {exc}") from exc
        return cls(base, tuple(ops))


def apply_pattern(p: SubdivisionPattern) -> Graph:
    """The graph obtained by applying every operation of ``p``.

    New vertices are numbered after the base vertices, in edge order.
    """
    n = p.base.n
    edges: list[tuple[int, int]] = []
    for (a, b), op in zip(p.base.edges(), p.ops, strict=True):
        if op == Op.NONE:
            edges.append((a, b))
        elif op == Op.S1:
            edges += [(a, n), (n, b)]
        elif op == Op.S2:
            edges += [(a, n), (n, n + 1), (n + 1, b)]
        else:
            edges += [(a, n), (n, b), (a, n + 1), (n + 1, b)]
        n += op.added
    return Graph.from_edges(n, edges)


_EDGE_PERMUTATIONS: dict[Graph, list[tuple[int, ...]]] = {}


def edge_permutations(base: Graph) -> list[tuple[int, ...]]:
    """Edge index maps of every automorphism of ``base``; the identity comes first."""
    cached = _EDGE_PERMUTATIONS.get(base)
    if cached is not None:
        return cached
    edges = base.edges()
    index = {e: i for i, e in enumerate(edges)}
    out = []
    for perm in automorphisms(base):
        mapped = [0] * len(edges)
        for i, (u, v) in enumerate(edges):
            a, b = perm[u], perm[v]
            mapped[i] = index[(a, b) if a < b else (b, a)]
        out.append(tuple(mapped))
    _EDGE_PERMUTATIONS[base] = out
    return out


def orbit_key(base: Graph, ops: Sequence[Op]) -> tuple[Op, ...]:
    """Smallest image of ``ops`` under the automorphisms of ``base``."""
    best = tuple(ops)
    for mapped in edge_permutations(base):
        image = [Op.NONE] * len(ops)
        for i, op in enumerate(ops):
            image[mapped[i]] = op
        candidate = tuple(image)
        if candidate < best:
            best = candidate
    return best


def lower_covers(p: SubdivisionPattern) -> list[SubdivisionPattern]:
    """Patterns one added vertex below ``p``."""
    out = []
    for i, op in enumerate(p.ops):
        down = _DOWN[op]
        if down is not None:
            out.append(p.with_op(i, down))
    return out


def upper_covers(p: SubdivisionPattern) -> list[SubdivisionPattern]:
    """Patterns one added vertex above ``p``."""
    return [p.with_op(i, up) for i, op in enumerate(p.ops) for up in _UP[op]]


def all_patterns(base: Graph) -> Iterator[SubdivisionPattern]:
    """Every pattern on ``base``, ``4 ** m`` of them, without any reduction."""
    for ops in product(Op, repeat=base.m):
        yield SubdivisionPattern(base, ops)
