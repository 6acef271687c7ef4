"""Registry of named graphs and parametric families."""

from __future__ import annotations

import re
from typing import TYPE_CHECKING

from mmwidth._exceptions import InvalidInputError, NotFoundError
from mmwidth.graph._graph import Graph

if TYPE_CHECKING:
    from collections.abc import Callable

__all__ = [
    "available_names",
    "complete",
    "cycle",
    "grid",
    "grid_coord",
    "grid_index",
    "named",
    "path",
    "register_named",
]

_REGISTRY: dict[str, Callable[[], Graph]] = {}


def register_named(name: str, factory: Callable[[], Graph]) -> None:
    """Register ``factory`` under ``name``.

    Raises
    ------
    ValueError
        If ``name`` is already registered.
    """
    if name in _REGISTRY:
        raise ValueError(f"Graph {name!r} is already registered")
    _REGISTRY[name] = factory


def available_names() -> list[str]:
    """Registered fixed names, sorted; parametric families are not listed."""
    return sorted(_REGISTRY)


def complete(n: int) -> Graph:
    """Complete graph on ``n`` vertices."""
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)), f"K{n}")


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidInputError(f"cycles need at least 3 vertices, got {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)), f"C{n}")


def path(n: int) -> Graph:
    """Path on ``n`` vertices, in path order."""
    if n < 1:
        raise InvalidInputError(f"paths need at least 1 vertex, got {n}")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)), f"P{n}")


def grid_index(i: int, j: int, k: int) -> int:
    """Vertex index of grid point ``(i, j)``, 1-based column ``i`` and row ``j``."""
    if not (1 <= i <= k and 1 <= j <= k):
        raise InvalidInputError(f"({i}, {j}) is not a point of the {k}x{k} grid")
    return (i - 1) * k + (j - 1)


def grid_coord(v: int, k: int) -> tuple[int, int]:
    """Inverse of `grid_index`."""
    return v // k + 1, v % k + 1


def grid(k: int) -> Graph:
    """The ``k x k`` grid; ``(i, j)`` is adjacent to ``(i', j')`` iff ``|i-i'| + |j-j'| = 1``."""
    if k < 1:
        raise InvalidInputError(f"grid size must be positive, got {k}")
    edges = []
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            if i < k:
                edges.append((grid_index(i, j, k), grid_index(i + 1, j, k)))
            if j < k:
                edges.append((grid_index(i, j, k), grid_index(i, j + 1, k)))
    return Graph.from_edges(k * k, edges, f"grid({k})")


def _wheel(rim: int) -> Graph:
    # hub 0, rim 1..rim in cyclic order
    edges = [(0, i) for i in range(1, rim + 1)]
    edges += [(i, i % rim + 1) for i in range(1, rim + 1)]
    return Graph.from_edges(rim + 1, edges, f"W{rim + 1}")


def _w5_plus_e() -> Graph:
    g = _wheel(4)
    return Graph.from_edges(5, [*g.edges(), (1, 3)], "W5_plus_e")


def _k33() -> Graph:
    return Graph.from_edges(6, ((u, v) for u in range(3) for v in range(3, 6)), "K33")


def _k33_plus_e() -> Graph:
    return Graph.from_edges(6, [*_k33().edges(), (0, 1)], "K33_plus_e")


def _prism() -> Graph:
    edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]
    return Graph.from_edges(6, edges, "prism")


def _prism_plus_e() -> Graph:
    return Graph.from_edges(6, [*_prism().edges(), (0, 4)], "prism_plus_e")


register_named("W5", lambda: _wheel(4))
register_named("W5_plus_e", _w5_plus_e)
register_named("W6", lambda: _wheel(5))
register_named("K33", _k33)
register_named("K33_plus_e", _k33_plus_e)
register_named("prism", _prism)
register_named("prism_plus_e", _prism_plus_e)

_FAMILY = re.compile(r"^(?P<kind>[KCP])_?(?P<n>\d+)$")


def named(name: str) -> Graph:
    """Look up a named graph.

    Besides the registered names, ``K<n>``, ``C<n>`` and ``P<n>`` (also
    written ``K_<n>``) build complete graphs, cycles and paths, and
    ``grid:<k>`` builds the ``k x k`` grid.

    Raises
    ------
    NotFoundError
        If the name is unknown.
    """
    factory = _REGISTRY.get(name)
    if factory is not None:
        return factory()
    if name.startswith("grid:"):
        try:
            k = int(name.split(":", 1)[1])
        except ValueError as exc:
            raise NotFoundError(f"Unknown graph {name!r}") from exc
        return grid(k)
    match = _FAMILY.match(name)
    if match is None:
        raise NotFoundError(f"Unknown graph {name!r}; known: {', '.join(available_names())}")
    n = int(match["n"])
    kind = match["kind"]
    if kind == "K":
        return complete(n)
    if kind == "C":
        return cycle(n)
    return path(n)
