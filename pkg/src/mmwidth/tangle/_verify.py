"""Axiom-by-axiom tangle verification.

For a certificate of order ``k``:

* every ``S`` with ``mm(S) <= k - 1`` has ``S`` or its complement as a member;
* no three members cover the ground set;
* no member is the ground set minus one vertex.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any, Literal

from mmwidth._exceptions import GroundSetTooLargeError, InvalidInputError, InvariantViolationError
from mmwidth.cuts import mm_function
from mmwidth.graph import grid
from mmwidth.log import Loggable
from mmwidth.tangle._grid import DEFAULT_SEED, covering_triple, sweep_small_triples

if TYPE_CHECKING:
    from mmwidth._workers import WorkerPool
    from mmwidth.graph import Graph
    from mmwidth.tangle._certificate import TangleCertificate

__all__ = ["TANGLE_MAX_GROUND", "TangleReport", "TangleVerifier", "verify_tangle"]

TANGLE_MAX_GROUND = 20

_CHUNK = 1 << 12

Axiom = Literal["T1", "T2", "T3"]


@dataclass(frozen=True, slots=True)
class TangleReport:
    """Verification outcome; truthy when every axiom holds.

    ``mode`` is ``"sweep"`` when the triple axiom of an oracle
    certificate was checked on sampled triples only.
    """

    ok: bool
    order: int
    mode: Literal["exhaustive", "sweep"]
    axiom: Axiom | None = None
    witness: tuple[int, ...] = ()
    """Offending sets as vertex bitmasks."""
    checked: int = field(default=0, compare=False)
    """Number of sets examined for the first axiom."""

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict[str, Any]:
        return {
            "ok": self.ok,
            "order": self.order,
            "mode": self.mode,
            "axiom": self.axiom,
            "witness": [hex(s) for s in self.witness],
            "checked": self.checked,
        }


def _scan_t1(task: tuple[Graph, TangleCertificate, int, int]) -> tuple[int, int]:
    """First set in ``[start, stop)`` violating the first axiom, or -1, and the count checked."""
    g, cert, start, stop = task
    f = mm_function(g, cap=cert.order)
    full = g.vertices
    checked = 0
    for s in range(start, stop):
        if f(s) > cert.order - 1:
            continue
        checked += 1
        if not (cert.membership(s) or cert.membership(full ^ s)):
            return s, checked
    return -1, checked


class TangleVerifier(Loggable):
    """Checks tangle certificates against a graph.

    Parameters
    ----------
    max_ground : int
        Largest vertex count accepted; the first axiom is checked over
        every subset, so larger graphs are refused.
    pool : WorkerPool | None
        Optional pool the first-axiom scan is split across.
    samples : int
        Sampled triples for oracle certificates beyond exhaustive reach.
    seed : int
        Seed for the triple sampling.
    """

    def __init__(
        self,
        *,
        max_ground: int = TANGLE_MAX_GROUND,
        pool: WorkerPool | None = None,
        samples: int = 100_000,
        seed: int = DEFAULT_SEED,
    ) -> None:
        self.max_ground = max_ground
        self.pool = pool
        self.samples = samples
        self.seed = seed

    @property
    def name(self) -> str:
        return "tangle-verifier"

    def verify(self, g: Graph, cert: TangleCertificate) -> TangleReport:
        """Check all three axioms, reporting the first violation.

        Raises
        ------
        InvalidInputError
            If the certificate is for another ground set, or an oracle
            certificate is checked against a graph other than its grid.
        GroundSetTooLargeError
            If ``g`` has more than `max_ground` vertices.
        """
        if cert.ground_size != g.n:
            raise InvalidInputError(
                f"certificate is over {cert.ground_size} vertices, graph has {g.n}"
            )
        if g.n > self.max_ground:
            raise GroundSetTooLargeError("tangle verification", g.n, self.max_ground)
        if cert.oracle is not None and grid(cert.oracle.k).adj != g.adj:
            raise InvalidInputError("grid-small certificates only apply to their grid")

        order = cert.order
        full = g.vertices
        mode: Literal["exhaustive", "sweep"] = "exhaustive"

        # sets avoiding the top vertex stand for each complementary pair
        half = 1 << max(g.n - 1, 0)
        tasks = [(g, cert, lo, min(lo + _CHUNK, half)) for lo in range(0, half, _CHUNK)]
        if self.pool is not None:
            results = self.pool.map_ordered(_scan_t1, tasks)
        else:
            results = [_scan_t1(task) for task in tasks]
        checked = 0
        for bad, count in results:
            checked += count
            if bad >= 0:
                self.logger.debug("first axiom fails on %#x", bad)
                return TangleReport(False, order, mode, "T1", (bad,), checked)

        if cert.sets is not None:
            triple = covering_triple([*cert.sets, 0], full)
            if triple is not None:
                return TangleReport(False, order, mode, "T2", triple, checked)
        else:
            if cert.oracle is None:
                raise InvariantViolationError("certificate has neither explicit sets nor an oracle")
            k = cert.oracle.k
            sweep = (
                sweep_small_triples(k)
                if k <= 3
                else sweep_small_triples(k, samples=self.samples, seed=self.seed)
            )
            if not sweep.exhaustive:
                mode = "sweep"
            if sweep.counterexample is not None:
                return TangleReport(False, order, mode, "T2", sweep.counterexample, checked)

        for v in range(g.n):
            rest = full & ~(1 << v)
            if rest and cert.membership(rest):
                return TangleReport(False, order, mode, "T3", (rest,), checked)
        return TangleReport(True, order, mode, checked=checked)


def verify_tangle(
    g: Graph, cert: TangleCertificate, *, max_ground: int = TANGLE_MAX_GROUND
) -> TangleReport:
    """Verify ``cert`` on ``g`` with a default `TangleVerifier`."""
    return TangleVerifier(max_ground=max_ground).verify(g, cert)
