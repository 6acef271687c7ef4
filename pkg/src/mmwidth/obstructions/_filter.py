from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import TYPE_CHECKING, Any, Literal

from mmwidth._exceptions import GroundSetTooLargeError, InvalidInputError, ResourceLimitError
from mmwidth.graph import canonical_relabel, graph6_decode, graph6_encode, is_k_connected
from mmwidth.minor import contains_any, one_step_minors
from mmwidth.obstructions._patterns import SubdivisionPattern
from mmwidth.obstructions._sides import eleven_triples, good_sides
from mmwidth.tangle import (
    TANGLE_MAX_GROUND,
    TangleCertificate,
    obstruction_tangle,
    verify_tangle,
)
from mmwidth.width import DP_MAX_GROUND, mmw_at_most

if TYPE_CHECKING:
    from collections.abc import Mapping

    from mmwidth.graph import Graph

__all__ = [
    "ObstructionRecord",
    "Verdict",
    "classify_candidate",
    "family_tag",
    "filter_obstruction",
    "make_record",
    "width_at_most",
]

Verdict = Literal["alive", "dead", "obstruction"]


@dataclass(frozen=True, slots=True)
class ObstructionRecord:
    """A graph of maximum matching width 3 whose proper minors all have width at most 2."""

    graph: Graph
    """Canonically relabelled."""
    family: str
    base: str | None = None
    """Name of the base graph the record was subdivided from."""
    pattern: SubdivisionPattern | None = field(default=None, compare=False)
    width: int = 3
    tangle: TangleCertificate | None = field(default=None, compare=False)
    """Order-3 tangle, present when the recipe verified."""
    minors: tuple[str, ...] = field(default=(), compare=False)
    """Canonical graph6 of every one-step minor; each has width at most 2."""

    @property
    def g6(self) -> str:
        return graph6_encode(self.graph)

    def to_json(self) -> dict[str, Any]:
        return {
            "g6": self.g6,
            "n": self.graph.n,
            "m": self.graph.m,
            "family": self.family,
            "base": self.base,
            "pattern": None if self.pattern is None else self.pattern.to_json(),
            "width": self.width,
            "tangle": None if self.tangle is None else self.tangle.to_json(),
            "minors": list(self.minors),
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> ObstructionRecord:
        try:
            pattern = data.get("pattern")
            tangle = data.get("tangle")
            return cls(
                graph=graph6_decode(data["g6"]),
                family=str(data["family"]),
                base=data.get("base"),
                pattern=None if pattern is None else SubdivisionPattern.from_json(pattern),
                width=int(data.get("width", 3)),
                tangle=None if tangle is None else TangleCertificate.from_json(tangle),
                minors=tuple(data.get("minors", ())),
            )
        except (KeyError, TypeError) as exc:
            raise InvalidInputError(f"malformed obstruction record: {exc}") from exc


@lru_cache(maxsize=1 << 16)
def _at_most(g: Graph, w: int, limit: int) -> bool:
    return mmw_at_most(g, w, max_ground=limit, hard_max=limit) is not None


def width_at_most(g: Graph, w: int, limit: int = DP_MAX_GROUND) -> bool:
    """``mmw(g) <= w``, memoized per isomorphism class.

    Raises
    ------
    GroundSetTooLargeError
        If a block of ``g`` has more than ``limit`` vertices.
    """
    return _at_most(canonical_relabel(g), w, limit)


def _is_minimal_width3(g: Graph, limit: int) -> bool:
    return width_at_most(g, 3, limit) and all(
        width_at_most(minor, 2, limit) for minor in one_step_minors(g)
    )


def classify_candidate(task: tuple[Graph, tuple[Graph, ...], int, int, int]) -> Verdict:
    """Sort one pipeline candidate.

    ``task`` is ``(graph, known obstructions, default limit, hard limit,
    minor budget)``. Candidates above the default limit are first tested
    for a known obstruction minor and only then, up to the hard limit,
    solved exactly.

    Raises
    ------
    ResourceLimitError
        If the candidate can neither be pruned nor solved.
    """
    g, known, max_ground, hard_max, budget = task
    limit = max_ground
    if g.n > max_ground:
        if contains_any(g, known, budget=budget) is not None:
            return "dead"
        if g.n > hard_max:
            raise ResourceLimitError(
                f"candidate {graph6_encode(g)} on {g.n} vertices has no known obstruction "
                f"minor and exceeds the exact limit of {hard_max}"
            )
        limit = hard_max
    if width_at_most(g, 2, limit):
        return "alive"
    return "obstruction" if _is_minimal_width3(g, limit) else "dead"


def family_tag(g: Graph) -> str:
    """``O3`` for a 3-connected seven-vertex graph, else ``O2``."""
    return "O3" if g.n == 7 and is_k_connected(g, 3) else "O2"


def make_record(
    g: Graph,
    *,
    family: str | None = None,
    base: str | None = None,
    pattern: SubdivisionPattern | None = None,
    tangle_max_ground: int = TANGLE_MAX_GROUND,
) -> ObstructionRecord:
    """Wrap a confirmed obstruction, attaching its tangle when the recipe verifies."""
    canonical = canonical_relabel(g)
    tangle = None
    if g.n <= tangle_max_ground:
        cert = obstruction_tangle(canonical, good_sides(canonical), eleven_triples(canonical))
        if verify_tangle(canonical, cert, max_ground=tangle_max_ground):
            tangle = cert
    minors = tuple(sorted({graph6_encode(canonical_relabel(m)) for m in one_step_minors(g)}))
    return ObstructionRecord(
        graph=canonical,
        family=family or family_tag(g),
        base=base,
        pattern=pattern,
        tangle=tangle,
        minors=minors,
    )


def filter_obstruction(
    g: Graph,
    *,
    max_ground: int = DP_MAX_GROUND,
    family: str | None = None,
    base: str | None = None,
    pattern: SubdivisionPattern | None = None,
) -> ObstructionRecord | None:
    """Record for ``g`` if it has width 3 and every one-step minor has width at most 2.

    Raises
    ------
    ResourceLimitError
        If ``g`` has more than ``max_ground`` vertices.
    """
    if g.n > max_ground:
        raise ResourceLimitError(
            f"candidate on {g.n} vertices exceeds the exact-width limit of {max_ground}"
        )
    try:
        if width_at_most(g, 2, max_ground) or not _is_minimal_width3(g, max_ground):
            return None
    except GroundSetTooLargeError as exc:
        raise ResourceLimitError(str(exc)) from exc
    return make_record(g, family=family, base=base, pattern=pattern)

