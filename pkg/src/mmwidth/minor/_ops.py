from __future__ import annotations

from typing import TYPE_CHECKING

from mmwidth.graph import canonical_form, contract_edge, delete_edge, delete_vertex
from mmwidth.minor._search import DEFAULT_MINOR_BUDGET, contains_any

if TYPE_CHECKING:
    from collections.abc import Callable, Sequence

    from mmwidth.graph import Graph

__all__ = ["is_minor_minimal", "mmw_le2_by_obstructions", "one_step_minors"]


def one_step_minors(g: Graph) -> list[Graph]:
    """Every graph one vertex deletion, edge deletion or contraction away from ``g``.

    Isomorphic results are kept once, in the order vertex deletions,
    edge deletions, contractions.
    """
    seen: set[bytes] = set()
    out = []
    candidates = [delete_vertex(g, v) for v in range(g.n)]
    candidates += [delete_edge(g, e) for e in g.edges()]
    candidates += [contract_edge(g, e) for e in g.edges()]
    for minor in candidates:
        key = canonical_form(minor)
        if key not in seen:
            seen.add(key)
            out.append(minor)
    return out


def is_minor_minimal(g: Graph, pred: Callable[[Graph], bool]) -> bool:
    """``pred(g)`` holds and fails on every one-step minor.

    For a property whose failure is closed under minors this is
    minimality among all proper minors.
    """
    return pred(g) and not any(pred(minor) for minor in one_step_minors(g))


def mmw_le2_by_obstructions(
    g: Graph, catalog: Sequence[Graph], *, budget: int = DEFAULT_MINOR_BUDGET
) -> bool:
    """Whether ``g`` has no catalog graph as a minor.

    Raises
    ------
    BudgetExceededError
        If a containment query exceeds ``budget``.
    """
    return contains_any(g, catalog, budget=budget) is None
