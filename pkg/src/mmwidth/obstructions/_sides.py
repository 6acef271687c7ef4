"""2-cut structure used by the obstruction tangles."""

from __future__ import annotations

from typing import TYPE_CHECKING

from mmwidth.graph import components, two_cuts

if TYPE_CHECKING:
    from mmwidth.graph import Graph

__all__ = ["eleven_triples", "good_sides", "is_gadget_component"]


def is_gadget_component(g: Graph, comp: int, a: int, b: int) -> bool:
    """Whether ``comp`` hangs between ``a`` and ``b`` as ``a-c-b`` or ``a-c-d-b``."""
    pair = 1 << a | 1 << b
    count = comp.bit_count()
    if count == 1:
        c = comp.bit_length() - 1
        return g.adj[c] == pair
    if count == 2:
        c = (comp & -comp).bit_length() - 1
        d = comp.bit_length() - 1
        ends = {g.adj[c] & ~(1 << d), g.adj[d] & ~(1 << c)}
        return g.has_edge(c, d) and ends == {1 << a, 1 << b}
    return False


def good_sides(g: Graph) -> list[int]:
    """Good sides of the 2-cuts of ``g`` as vertex masks.

    For a 2-cut ``{a, b}`` whose components are all ``a-c-b`` or
    ``a-c-d-b`` gadgets except exactly one, the good side is ``{a, b}``
    together with the gadget components.
    """
    out = []
    full = g.vertices
    for a, b in two_cuts(g):
        pair = 1 << a | 1 << b
        comps = components(g, full & ~pair)
        gadgets = [c for c in comps if is_gadget_component(g, c, a, b)]
        if len(comps) - len(gadgets) == 1:
            side = pair
            for c in gadgets:
                side |= c
            out.append(side)
    return sorted(set(out))


def eleven_triples(g: Graph) -> list[tuple[int, int, int]]:
    """Triples ``(a, u, b)`` for parallel paths ``a-u-b`` and ``a-v-b``.

    Every vertex ``u`` whose neighborhood is exactly a 2-cut ``{a, b}``
    shared with at least one other such vertex contributes a triple.
    """
    out = []
    for a, b in two_cuts(g):
        pair = 1 << a | 1 << b
        middles = [u for u in range(g.n) if g.adj[u] == pair]
        if len(middles) >= 2:
            out.extend((a, u, b) for u in middles)
    return sorted(out)
