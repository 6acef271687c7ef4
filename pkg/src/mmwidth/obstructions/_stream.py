from __future__ import annotations

from typing import TYPE_CHECKING

from mmwidth.log import Loggable
from mmwidth.obstructions._patterns import (
    SubdivisionPattern,
    lower_covers,
    orbit_key,
    upper_covers,
)

if TYPE_CHECKING:
    from collections.abc import Iterator

    from mmwidth.graph import Graph
    from mmwidth.obstructions._patterns import Op

__all__ = ["CandidateStream"]


class CandidateStream(Loggable):
    """Patterns on one base, tier by tier in the number of added vertices.

    Only one pattern per orbit of the base automorphism group is kept.
    The consumer reports which patterns of a tier still have width at
    most 2 through `mark_alive`; a pattern of the next tier is produced
    only when every pattern one step below it was marked. Anything else
    has a proper minor of width 3 and cannot be minimal.

    Parameters
    ----------
    base : Graph
        3-connected base graph.
    label : str
        Name used in log records.
    """

    def __init__(self, base: Graph, label: str) -> None:
        self.base = base
        self.label = label
        self.tier = 0
        self.produced = 0
        self._alive: set[tuple[Op, ...]] = set()

    @property
    def name(self) -> str:
        return self.label

    def _key(self, p: SubdivisionPattern) -> tuple[Op, ...]:
        return orbit_key(self.base, p.ops)

    def mark_alive(self, p: SubdivisionPattern) -> None:
        """Record that ``p`` has width at most 2."""
        self._alive.add(self._key(p))

    def tiers(self) -> Iterator[list[SubdivisionPattern]]:
        """Yield each tier after the previous one has received its feedback."""
        current = [SubdivisionPattern.plain(self.base)]
        while current:
            self._alive = set()
            self.produced += len(current)
            yield current
            parents = [p for p in current if p.ops in self._alive]
            self.logger.debug(
                "tier %d: %d patterns, %d below width 3", self.tier, len(current), len(parents)
            )
            current = self._next_tier(parents)
            self.tier += 1

    def _next_tier(self, parents: list[SubdivisionPattern]) -> list[SubdivisionPattern]:
        seen: dict[tuple[Op, ...], SubdivisionPattern] = {}
        for p in parents:
            for up in upper_covers(p):
                key = self._key(up)
                if key in seen:
                    continue
                if all(self._key(low) in self._alive for low in lower_covers(up)):
                    seen[key] = SubdivisionPattern(self.base, key)
        return [seen[key] for key in sorted(seen)]
