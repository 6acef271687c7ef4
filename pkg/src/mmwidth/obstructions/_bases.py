from __future__ import annotations

from functools import lru_cache
from typing import TYPE_CHECKING

from mmwidth.graph import (
    available_names,
    canonical_form,
    canonical_graph6,
    complete,
    delete_edge,
    enumerate_graphs,
    is_k_connected,
    named,
)

if TYPE_CHECKING:
    from mmwidth.graph import Graph

__all__ = ["BASE_SIZES", "base_graphs", "base_label", "family_of", "is_edge_minimal_3_connected"]

BASE_SIZES = (4, 5, 6)
"""Vertex counts of the 3-connected graphs that get good-subdivided."""


def _three_connected(g: Graph) -> bool:
    return is_k_connected(g, 3)


def is_edge_minimal_3_connected(g: Graph) -> bool:
    """3-connected, and deleting any edge breaks 3-connectivity."""
    return _three_connected(g) and not any(
        _three_connected(delete_edge(g, e)) for e in g.edges()
    )


@lru_cache(maxsize=1)
def base_graphs() -> dict[int, tuple[Graph, ...]]:
    """Base graphs grouped by vertex count.

    Groups 4, 5 and 6 hold every 3-connected graph on that many vertices;
    group 7 holds the edge-minimal 3-connected graphs on seven vertices,
    which are obstructions in their own right. Each group is in
    enumeration order (edge count, then graph6).
    """
    groups = {n: tuple(enumerate_graphs(n, _three_connected)) for n in BASE_SIZES}
    groups[7] = tuple(enumerate_graphs(7, is_edge_minimal_3_connected))
    return groups


@lru_cache(maxsize=1)
def _known_labels() -> dict[bytes, str]:
    labels = {canonical_form(complete(n)): f"K{n}" for n in range(1, 8)}
    for name in available_names():
        labels.setdefault(canonical_form(named(name)), name)
    return labels


def base_label(g: Graph) -> str:
    """Registered name of ``g`` up to isomorphism, else its canonical graph6."""
    return _known_labels().get(canonical_form(g), canonical_graph6(g))


def family_of(base: Graph) -> str:
    """Family tag: ``O3`` for the seven-vertex group, else ``O<n>`` for the base size."""
    return "O3" if base.n == 7 else f"O{base.n}"
