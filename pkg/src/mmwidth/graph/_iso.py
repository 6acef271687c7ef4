"""Canonical forms and small-graph enumeration via nauty; automorphisms via networkx."""

from __future__ import annotations

from functools import lru_cache
from typing import TYPE_CHECKING

import pynauty
from networkx.algorithms import isomorphism

from mmwidth._exceptions import GroundSetTooLargeError, InvalidInputError
from mmwidth.graph._bits import bits
from mmwidth.graph._graph import Graph, relabel
from mmwidth.graph._graph6 import graph6_encode
from mmwidth.graph._structure import to_networkx

if TYPE_CHECKING:
    from collections.abc import Callable

__all__ = [
    "ENUMERATION_LIMIT",
    "automorphisms",
    "canonical_form",
    "canonical_graph6",
    "canonical_relabel",
    "enumerate_graphs",
    "is_isomorphic",
]

ENUMERATION_LIMIT = 7


def _nauty(g: Graph) -> pynauty.Graph:
    adjacency = {v: list(bits(g.adj[v])) for v in range(g.n)}
    return pynauty.Graph(g.n, directed=False, adjacency_dict=adjacency)


def canonical_form(g: Graph) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic."""
    if g.n == 0:
        return b"\x00"
    return bytes([g.n]) + pynauty.certificate(_nauty(g))


def canonical_relabel(g: Graph) -> Graph:
    """Isomorphic copy of ``g`` in nauty's canonical vertex order."""
    if g.n <= 1:
        return Graph(g.n, g.adj, g.label)
    order = pynauty.canon_label(_nauty(g))
    perm = [0] * g.n
    for new, old in enumerate(order):
        perm[old] = new
    return relabel(g, perm)


def canonical_graph6(g: Graph) -> str:
    """graph6 text of the canonical relabelling; equal strings mean isomorphic graphs."""
    return graph6_encode(canonical_relabel(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Whether ``g`` and ``h`` are isomorphic."""
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degree(v) for v in range(g.n)) != sorted(h.degree(v) for v in range(h.n)):
        return False
    return canonical_form(g) == canonical_form(h)


def automorphisms(g: Graph) -> list[tuple[int, ...]]:
    """Every automorphism of ``g`` as an image tuple, identity first.

    The group is listed by networkx's VF2 matcher of ``g`` against itself;
    after the identity the images are in lexicographic order.
    """
    nxg = to_networkx(g)
    matcher = isomorphism.GraphMatcher(nxg, nxg)
    identity = tuple(range(g.n))
    found = {tuple(m[v] for v in range(g.n)) for m in matcher.isomorphisms_iter()}
    return sorted(found, key=lambda p: (p != identity, p))


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph.empty(0),)
    seen: dict[bytes, Graph] = {}
    for g in _classes(n - 1):
        for nbrs in range(1 << (n - 1)):
            adj = [a | (1 << (n - 1)) if nbrs >> v & 1 else a for v, a in enumerate(g.adj)]
            h = Graph(n, (*adj, nbrs))
            key = canonical_form(h)
            if key not in seen:
                seen[key] = canonical_relabel(h)
    return tuple(sorted(seen.values(), key=lambda h: (h.m, graph6_encode(h))))


def enumerate_graphs(
    n: int, pred: Callable[[Graph], bool] | None = None
) -> list[Graph]:
    """One representative per isomorphism class on ``n`` vertices.

    Classes on ``n`` vertices are grown from those on ``n - 1`` by adding
    a vertex with every possible neighborhood, deduplicated by canonical
    form. Representatives are canonically relabelled and sorted by edge
    count, then graph6 text.

    Raises
    ------
    GroundSetTooLargeError
        If ``n`` exceeds 7.
    """
    if n > ENUMERATION_LIMIT:
        raise GroundSetTooLargeError("graph enumeration", n, ENUMERATION_LIMIT)
    if n < 0:
        raise InvalidInputError(f"vertex count must be non-negative, got {n}")
    return [g for g in _classes(n) if pred is None or pred(g)]
