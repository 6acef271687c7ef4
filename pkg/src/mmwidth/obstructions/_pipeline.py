"""Regeneration of the obstruction catalog for maximum matching width at most 2."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any

from psygnal import Signal

from mmwidth._workers import WorkerPool
from mmwidth.config import Settings
from mmwidth.graph import canonical_form
from mmwidth.log import Loggable
from mmwidth.obstructions._bases import base_graphs, base_label, family_of
from mmwidth.obstructions._filter import (
    ObstructionRecord,
    classify_candidate,
    filter_obstruction,
    make_record,
)
from mmwidth.obstructions._patterns import apply_pattern
from mmwidth.obstructions._stream import CandidateStream

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence

    from mmwidth.graph import Graph

__all__ = ["PRINTED_TOTALS", "CatalogPipeline", "CatalogSummary", "assemble_catalog", "summarize"]

PRINTED_TOTALS = (42, 45)
"""Catalog sizes stated in the literature; the computed total is reported against both."""

GROUP_ORDER = (7, 4, 5, 6)


@dataclass(frozen=True, slots=True)
class CatalogSummary:
    """Per-family and per-base counts of a catalog."""

    counts: dict[str, int]
    total: int
    candidates: int = 0
    per_base: dict[str, int] = field(default_factory=dict)
    """Records per base label; bases that were searched without result count 0."""

    @property
    def matches(self) -> list[int]:
        """Printed totals equal to the computed one."""
        return [t for t in PRINTED_TOTALS if t == self.total]

    def discrepancies(self) -> list[dict[str, int]]:
        """Signed gap between the computed total and each printed total it misses."""
        return [
            {"printed": t, "computed": self.total, "delta": self.total - t}
            for t in PRINTED_TOTALS
            if t != self.total
        ]

    def to_json(self) -> dict[str, Any]:
        return {
            "counts": dict(sorted(self.counts.items())),
            "total": self.total,
            "candidates": self.candidates,
            "per_base": dict(sorted(self.per_base.items())),
            "printed_totals": list(PRINTED_TOTALS),
            "matches": self.matches,
            "discrepancies": [] if self.matches else self.discrepancies(),
        }


def summarize(
    records: Sequence[ObstructionRecord],
    candidates: int = 0,
    bases: Iterable[str] = (),
) -> CatalogSummary:
    """Count ``records`` per family and per base; ``bases`` seeds zero entries."""
    counts: dict[str, int] = {}
    per_base = dict.fromkeys(bases, 0)
    for r in records:
        counts[r.family] = counts.get(r.family, 0) + 1
        label = r.base or "unknown"
        per_base[label] = per_base.get(label, 0) + 1
    return CatalogSummary(counts, len(records), candidates, per_base)


class CatalogPipeline(Loggable):
    """Builds the obstruction catalog from 3-connected bases.

    The seven-vertex edge-minimal 3-connected graphs are filtered first;
    then every 3-connected base on 4, 5 and 6 vertices is good-subdivided
    tier by tier, each tier classified in parallel. Larger candidates are
    disposed of by a known obstruction minor whenever possible.

    Parameters
    ----------
    settings : Settings | None
        Limits and worker count; defaults when omitted.

    Signals
    -------
    sig_base_started : Signal[str, int]
        Emitted when a base graph is taken up.
        - str: base name
        - int: number of base vertices
    sig_tier_finished : Signal[str, int, int]
        Emitted after a tier has been classified.
        - str: base name
        - int: tier (added vertices)
        - int: number of patterns in the tier
    sig_record_found : Signal[str, str]
        Emitted for every new obstruction.
        - str: family tag
        - str: canonical graph6
    """

    sig_base_started = Signal(str, int)
    sig_tier_finished = Signal(str, int, int)
    sig_record_found = Signal(str, str)

    def __init__(self, settings: Settings | None = None) -> None:
        self.settings = settings or Settings()
        self.records: dict[bytes, ObstructionRecord] = {}
        self.candidates = 0
        self.searched: list[str] = []

    @property
    def name(self) -> str:
        return "catalog"

    def _add(self, record: ObstructionRecord) -> None:
        key = canonical_form(record.graph)
        if key in self.records:
            return
        self.records[key] = record
        self.logger.info("%s obstruction %s (base %s)", record.family, record.g6, record.base)
        self.sig_record_found.emit(record.family, record.g6)

    def _run_o3(self, bases: Iterable[Graph]) -> None:
        for g in bases:
            label = base_label(g)
            self.sig_base_started.emit(label, g.n)
            self.searched.append(label)
            self.candidates += 1
            record = filter_obstruction(g, max_ground=self.settings.dp_max_ground, base=label, family="O3")
            if record is not None:
                self._add(record)

    def _run_base(self, base: Graph, pool: WorkerPool) -> None:
        label = base_label(base)
        family = family_of(base)
        self.sig_base_started.emit(label, base.n)
        self.searched.append(label)
        stream = CandidateStream(base, label)
        s = self.settings
        for tier in stream.tiers():
            graphs = [apply_pattern(p) for p in tier]
            known = tuple(r.graph for r in self.records.values())
            tasks = [(g, known, s.dp_max_ground, s.dp_hard_max, s.minor_budget) for g in graphs]
            verdicts = pool.map_ordered(classify_candidate, tasks)
            self.candidates += len(tier)
            for p, g, verdict in zip(tier, graphs, verdicts, strict=True):
                if verdict == "alive":
                    stream.mark_alive(p)
                elif verdict == "obstruction" and canonical_form(g) not in self.records:
                    self._add(
                        make_record(
                            g,
                            family=family,
                            base=label,
                            pattern=p,
                            tangle_max_ground=s.tangle_max_ground,
                        )
                    )
            self.sig_tier_finished.emit(label, stream.tier, len(tier))

    def run(self, groups: Iterable[int] | None = None) -> list[ObstructionRecord]:
        """Run the selected base groups (all by default) and return the sorted catalog.

        Raises
        ------
        ResourceLimitError
            If a candidate can be neither pruned nor solved exactly.
        """
        selected = set(GROUP_ORDER if groups is None else groups)
        bases = base_graphs()
        with WorkerPool(self.settings.threads) as pool:
            for n in GROUP_ORDER:
                if n not in selected:
                    continue
                if n == 7:
                    self._run_o3(bases[7])
                    continue
                for base in bases[n]:
                    self._run_base(base, pool)
        catalog = self.catalog()
        self.logger.info(
            "catalog has %d graphs after %d candidates", len(catalog), self.candidates
        )
        return catalog

    def catalog(self) -> list[ObstructionRecord]:
        """Records found so far, ordered by family, then vertex count, then graph6."""
        return sorted(self.records.values(), key=lambda r: (r.family, r.graph.n, r.g6))

    def summary(self) -> CatalogSummary:
        """Summary of the records found so far."""
        return summarize(self.catalog(), self.candidates, self.searched)


def assemble_catalog(settings: Settings | None = None) -> tuple[list[ObstructionRecord], CatalogSummary]:
    """Run the whole pipeline and return the catalog with its summary."""
    pipeline = CatalogPipeline(settings)
    records = pipeline.run()
    summary = pipeline.summary()
    if not summary.matches:
        for gap in summary.discrepancies():
            pipeline.logger.warning(
                "computed %d obstructions, printed total is %d (delta %+d)",
                gap["computed"],
                gap["printed"],
                gap["delta"],
            )
    return records, summary
