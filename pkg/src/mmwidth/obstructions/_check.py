"""Re-verification of a catalog and the small-graph equivalence sweep."""

from __future__ import annotations

import random
from itertools import combinations
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any, TypeVar

from mmwidth._exceptions import BudgetExceededError, InvalidInputError, UnsupportedError
from mmwidth._workers import WorkerPool
from mmwidth.config import Settings
from mmwidth.graph import (
    ENUMERATION_LIMIT,
    Graph,
    canonical_form,
    complete,
    components,
    enumerate_graphs,
    graph6_encode,
    two_cuts,
)
from mmwidth.minor import has_minor, mmw_le2_by_obstructions, one_step_minors
from mmwidth.obstructions._filter import width_at_most
from mmwidth.obstructions._sides import is_gadget_component

if TYPE_CHECKING:
    from collections.abc import Callable, Sequence

    from mmwidth.obstructions._filter import ObstructionRecord

__all__ = [
    "CROSSCHECK_MAX_N",
    "CheckReport",
    "CrosscheckReport",
    "check_catalog",
    "crosscheck_small",
    "random_classes",
    "twins",
]

CROSSCHECK_MAX_N = 8
DEFAULT_SAMPLE = 1000

T = TypeVar("T")
R = TypeVar("R")


@dataclass(frozen=True, slots=True)
class CheckReport:
    """Outcome of `check_catalog`."""

    checked: int
    problems: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.problems

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict[str, Any]:
        return {"ok": self.ok, "checked": self.checked, "problems": list(self.problems)}


@dataclass(frozen=True, slots=True)
class CrosscheckReport:
    """Outcome of `crosscheck_small`."""

    checked: int
    per_size: dict[int, int] = field(default_factory=dict)
    counterexamples: tuple[str, ...] = ()
    undecided: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict[str, Any]:
        return {
            "ok": self.ok,
            "checked": self.checked,
            "per_size": {str(n): c for n, c in sorted(self.per_size.items())},
            "counterexamples": list(self.counterexamples),
            "undecided": list(self.undecided),
        }


def _map(
    pool: WorkerPool | None, settings: Settings, fn: Callable[[T], R], tasks: list[T]
) -> list[R]:
    if pool is not None:
        return pool.map_ordered(fn, tasks)
    with WorkerPool(settings.threads) as own:
        return own.map_ordered(fn, tasks)


def _verify_record(task: tuple[Graph, int]) -> list[str]:
    g, limit = task
    g6 = graph6_encode(g)
    try:
        if not width_at_most(g, 3, limit) or width_at_most(g, 2, limit):
            return [f"{g6}: width is not 3"]
        wide = [graph6_encode(m) for m in one_step_minors(g) if not width_at_most(m, 2, limit)]
    except UnsupportedError as exc:
        return [f"{g6}: {exc}"]
    return [f"{g6}: one-step minor {m} has width above 2" for m in wide]


def twins(g: Graph) -> list[Graph]:
    """Graphs obtained by swapping one path gadget ``a-c-d-b`` with ``a-c-b, a-d-b``, or back."""
    out = []
    for c, d in g.edges():
        if g.degree(c) != 2 or g.degree(d) != 2:
            continue
        a = (g.adj[c] & ~(1 << d)).bit_length() - 1
        b = (g.adj[d] & ~(1 << c)).bit_length() - 1
        if a != b and not g.has_edge(a, b):
            out.append(_swap(g, ((c, d),), ((c, b), (d, a))))
    for a, b in two_cuts(g):
        pair = 1 << a | 1 << b
        middles = [u for u in range(g.n) if g.adj[u] == pair]
        if len(middles) == 2 and not g.has_edge(a, b):
            c, d = middles
            out.append(_swap(g, ((c, b), (d, a)), ((c, d),)))
    return out


def _swap(g: Graph, remove: Sequence[tuple[int, int]], add: Sequence[tuple[int, int]]) -> Graph:
    adj = list(g.adj)
    for u, v in remove:
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
    for u, v in add:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(g.n, tuple(adj))


def _two_cut_problems(g: Graph) -> list[str]:
    out = []
    for a, b in two_cuts(g):
        comps = components(g, g.vertices & ~(1 << a | 1 << b))
        if len(comps) == 2 and not any(is_gadget_component(g, c, a, b) for c in comps):
            out.append(f"{graph6_encode(g)}: 2-cut {{{a}, {b}}} has no gadget side")
    return out


def _family_problems(record: ObstructionRecord) -> list[str]:
    g = record.graph
    g6 = graph6_encode(g)
    if record.family == "O3":
        if any(g.degree(u) != 3 and g.degree(v) != 3 for u, v in g.edges()):
            return [f"{g6}: O3 record has an edge with no degree-3 endpoint"]
        return []
    pattern = record.pattern
    if pattern is None:
        return []
    base = pattern.base
    if canonical_form(base) == canonical_form(complete(5)):
        return [f"{g6}: K5 base yields no obstruction"]
    if base.n == 6:
        touched = [
            1 << u | 1 << v for (u, v), op in zip(base.edges(), pattern.ops, strict=True) if op
        ]
        if not any(a & b for a, b in combinations(touched, 2)):
            return [f"{g6}: no two adjacent base edges are subdivided"]
    return []


def check_catalog(
    records: Sequence[ObstructionRecord],
    *,
    settings: Settings | None = None,
    pool: WorkerPool | None = None,
) -> CheckReport:
    """Re-verify a catalog from scratch.

    Every record must have width exactly 3 with every one-step minor of
    width at most 2; records must be pairwise non-isomorphic and pairwise
    minor-incomparable; the path/parallel gadget swap of a record must
    be a record as well; and a 2-cut with two components must have a
    gadget on one side.

    Family shape is checked too: every edge of an ``O3`` record has a
    degree-3 endpoint, a record subdivided from a six-vertex base has
    two adjacent subdivided base edges, and no record comes from ``K5``.
    """
    settings = settings or Settings()
    graphs = [r.graph for r in records]
    problems: list[str] = []
    verdicts = _map(pool, settings, _verify_record, [(g, settings.dp_hard_max) for g in graphs])
    for found in verdicts:
        problems.extend(found)

    keys: dict[bytes, str] = {}
    for g in graphs:
        key = canonical_form(g)
        if key in keys:
            problems.append(f"{graph6_encode(g)}: isomorphic to {keys[key]}")
        keys[key] = graph6_encode(g)

    for g in graphs:
        for h in graphs:
            if g is h or h.n > g.n or h.m > g.m:
                continue
            try:
                if has_minor(g, h, budget=settings.minor_budget) is not None:
                    problems.append(f"{graph6_encode(g)}: contains {graph6_encode(h)} as a minor")
            except BudgetExceededError:
                problems.append(
                    f"{graph6_encode(g)}: containment of {graph6_encode(h)} undecided within budget"
                )

    for g in graphs:
        for twin in twins(g):
            if canonical_form(twin) not in keys:
                problems.append(f"{graph6_encode(g)}: gadget twin {graph6_encode(twin)} missing")
        problems.extend(_two_cut_problems(g))
    for r in records:
        problems.extend(_family_problems(r))
    return CheckReport(len(records), tuple(problems))


def random_classes(n: int, count: int, seed: int) -> list[Graph]:
    """``count`` distinct isomorphism classes on ``n`` vertices, drawn with a seeded generator.

    Edge densities are varied per draw so sparse and dense classes both
    appear.
    """
    rng = random.Random(seed)
    pairs = [(u, v) for v in range(n) for u in range(v)]
    found: dict[bytes, Graph] = {}
    draws = 0
    while len(found) < count and draws < 50 * count:
        draws += 1
        p = rng.random()
        adj = [0] * n
        for u, v in pairs:
            if rng.random() < p:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        g = Graph(n, tuple(adj))
        found.setdefault(canonical_form(g), g)
    return list(found.values())


def _compare(task: tuple[Graph, tuple[Graph, ...], int]) -> tuple[str, bool | None]:
    g, catalog, budget = task
    try:
        agree = width_at_most(g, 2) == mmw_le2_by_obstructions(g, catalog, budget=budget)
    except BudgetExceededError:
        return graph6_encode(g), None
    return graph6_encode(g), agree


def crosscheck_small(
    catalog: Sequence[Graph],
    *,
    n_max: int = CROSSCHECK_MAX_N,
    sample: int = DEFAULT_SAMPLE,
    settings: Settings | None = None,
    pool: WorkerPool | None = None,
) -> CrosscheckReport:
    """Compare ``mmw <= 2`` with catalog-minor-freeness on small graphs.

    Every isomorphism class up to seven vertices is checked; for eight
    vertices, ``sample`` classes are drawn with the configured seed.

    Raises
    ------
    InvalidInputError
        If ``n_max`` is above 8.
    """
    if n_max > CROSSCHECK_MAX_N:
        raise InvalidInputError(f"crosscheck covers at most {CROSSCHECK_MAX_N} vertices, got {n_max}")
    settings = settings or Settings()
    catalog = tuple(catalog)
    graphs: list[Graph] = []
    per_size: dict[int, int] = {}
    for n in range(1, n_max + 1):
        if n <= ENUMERATION_LIMIT:
            batch = enumerate_graphs(n)
        else:
            batch = random_classes(n, sample, settings.sample_seed)
        per_size[n] = len(batch)
        graphs.extend(batch)

    results = _map(pool, settings, _compare, [(g, catalog, settings.minor_budget) for g in graphs])
    counter = tuple(g6 for g6, agree in results if agree is False)
    undecided = tuple(g6 for g6, agree in results if agree is None)
    return CrosscheckReport(len(graphs), per_size, counter, undecided)
