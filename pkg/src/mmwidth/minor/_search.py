"""Minor containment by backtracking over branch sets."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Any

from mmwidth._exceptions import BudgetExceededError, InvalidInputError, InvariantViolationError
from mmwidth.graph import bits, is_connected, popcount
from mmwidth.log import Loggable

if TYPE_CHECKING:
    from collections.abc import Sequence

    from mmwidth.graph import Graph

__all__ = [
    "DEFAULT_MINOR_BUDGET",
    "MinorModel",
    "MinorSearch",
    "contains_any",
    "has_minor",
    "verify_model",
]

DEFAULT_MINOR_BUDGET = 2_000_000


@dataclass(frozen=True, slots=True)
class MinorModel:
    """Branch sets witnessing that ``h`` is a minor of ``g``.

    ``branch_sets[x]`` is the vertex mask in ``g`` contracted onto
    vertex ``x`` of ``h``.
    """

    branch_sets: tuple[int, ...]

    def to_json(self) -> dict[str, Any]:
        return {str(x): sorted(bits(b)) for x, b in enumerate(self.branch_sets)}


def verify_model(g: Graph, h: Graph, model: MinorModel) -> bool:
    """Check connectivity, disjointness and edge coverage of ``model``."""
    sets = model.branch_sets
    if len(sets) != h.n:
        return False
    used = 0
    for b in sets:
        if b == 0 or b & ~g.vertices or b & used or not is_connected(g, b):
            return False
        used |= b
    return all(g.neighborhood(sets[x]) & sets[y] for x, y in h.edges())


def _placement_order(h: Graph) -> list[int]:
    """Highest degree first, then always a vertex with the most placed neighbors."""
    order: list[int] = []
    placed = 0
    rest = set(range(h.n))
    while rest:
        x = max(rest, key=lambda v: ((h.adj[v] & placed).bit_count(), h.degree(v), -v))
        order.append(x)
        placed |= 1 << x
        rest.remove(x)
    return order


def _connected_sets(g: Graph, anchor: int, allowed: int, max_size: int) -> list[int]:
    """Connected sets containing ``anchor`` whose other vertices lie in ``allowed``.

    Each set is produced once; the result is sorted by size, then mask.
    """
    out: list[int] = []

    def extend(current: int, closed: int, extension: int) -> None:
        out.append(current)
        if popcount(current) >= max_size:
            return
        while extension:
            w = extension & -extension
            extension ^= w
            v = w.bit_length() - 1
            exclusive = g.adj[v] & allowed & ~closed
            extend(current | w, closed | g.adj[v] | w, extension | exclusive)

    start = 1 << anchor
    extend(start, g.adj[anchor] | start, g.adj[anchor] & allowed)
    out.sort(key=lambda b: (b.bit_count(), b))
    return out


class MinorSearch(Loggable):
    """Budgeted branch-set search.

    Parameters
    ----------
    budget : int
        Maximum number of candidate branch sets tried per query.
    """

    def __init__(self, budget: int = DEFAULT_MINOR_BUDGET) -> None:
        if budget < 1:
            raise InvalidInputError(f"minor budget must be positive, got {budget}")
        self.budget = budget
        self.expansions = 0

    @property
    def name(self) -> str:
        return "minor-search"

    def _tick(self) -> None:
        self.expansions += 1
        if self.expansions > self.budget:
            raise BudgetExceededError("minor search", self.budget)

    def find(self, g: Graph, h: Graph) -> MinorModel | None:
        """A verified model of ``h`` in ``g``, or ``None`` if there is none.

        Raises
        ------
        BudgetExceededError
            If the search tries more than `budget` branch sets.
        """
        self.expansions = 0
        if h.n > g.n or h.m > g.m:
            return None
        order = _placement_order(h)
        sets = [0] * h.n

        def place(i: int, used: int) -> bool:
            if i == len(order):
                return True
            x = order[i]
            placed_nbrs = [y for y in order[:i] if h.has_edge(x, y)]
            unplaced = h.degree(x) - len(placed_nbrs)
            free = g.vertices & ~used
            max_size = popcount(free) - (len(order) - i - 1)
            if max_size < 1:
                return False
            for anchor in bits(free):
                allowed = free & ~((2 << anchor) - 1)
                for b in _connected_sets(g, anchor, allowed, max_size):
                    self._tick()
                    around = g.neighborhood(b)
                    if any(around & sets[y] == 0 for y in placed_nbrs):
                        continue
                    if popcount(around & free & ~b) < unplaced:
                        continue
                    sets[x] = b
                    if place(i + 1, used | b):
                        return True
            sets[x] = 0
            return False

        if not place(0, 0):
            self.logger.debug("no model after %d expansions", self.expansions)
            return None
        model = MinorModel(tuple(sets))
        if not verify_model(g, h, model):
            raise InvariantViolationError("minor search produced an invalid model")
        return model


def has_minor(g: Graph, h: Graph, *, budget: int = DEFAULT_MINOR_BUDGET) -> MinorModel | None:
    """Whether ``h`` is a minor of ``g``, with a model when it is."""
    return MinorSearch(budget).find(g, h)


def contains_any(
    g: Graph, catalog: Sequence[Graph], *, budget: int = DEFAULT_MINOR_BUDGET
) -> Graph | None:
    """The first catalog graph that is a minor of ``g``."""
    search = MinorSearch(budget)
    for h in catalog:
        if h.n <= g.n and h.m <= g.m and search.find(g, h) is not None:
            return h
    return None
