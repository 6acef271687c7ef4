from __future__ import annotations

import pytest

from mmwidth import GroundSetTooLargeError, InvalidInputError
from mmwidth._workers import WorkerPool
from mmwidth.graph import Graph, complete, grid, grid_index
from mmwidth.tangle import (
    TangleCertificate,
    TangleVerifier,
    grid_tangle,
    obstruction_tangle,
    tangle3_example,
    verify_tangle,
)

CORNER_TRIPLES = [
    sum(1 << grid_index(i, j, 3) for i, j in triple)
    for triple in (
        ((1, 1), (1, 2), (2, 1)),
        ((1, 2), (1, 3), (2, 3)),
        ((2, 3), (3, 2), (3, 3)),
        ((2, 1), (3, 1), (3, 2)),
    )
]


def test_grid3_tangle_passes(grid3: Graph) -> None:
    report = verify_tangle(grid3, tangle3_example())
    assert report
    assert report.order == 3
    assert report.mode == "exhaustive"
    assert report.axiom is None
    assert report.checked > 0


def test_removing_a_corner_triple_breaks_the_first_axiom(grid3: Graph) -> None:
    report = verify_tangle(grid3, tangle3_example().without(0xB))
    assert not report
    assert report.axiom == "T1"
    assert report.witness == (0xB,)


@pytest.mark.parametrize("triple", CORNER_TRIPLES)
def test_every_corner_triple_is_needed(grid3: Graph, triple: int) -> None:
    report = verify_tangle(grid3, tangle3_example().without(triple))
    assert report.axiom == "T1"
    assert report.witness[0] in (triple, grid3.vertices ^ triple)


def test_grid_oracle_passes(grid3: Graph) -> None:
    report = verify_tangle(grid3, grid_tangle(3))
    assert report
    assert report.mode == "exhaustive"


def test_k6_pairs_cover_the_ground_set(k6: Graph) -> None:
    report = verify_tangle(k6, obstruction_tangle(k6, [], []))
    assert not report
    assert report.axiom == "T2"
    assert len(report.witness) == 3
    assert report.witness[0] | report.witness[1] | report.witness[2] == k6.vertices


def test_third_axiom() -> None:
    g = Graph.empty(3)
    report = verify_tangle(g, TangleCertificate(1, 3, frozenset({0b001, 0b010, 0b011})))
    assert report.axiom == "T3"
    assert report.witness == (0b011,)


def test_report_json(grid3: Graph) -> None:
    data = verify_tangle(grid3, tangle3_example().without(0xB)).to_json()
    assert data["ok"] is False
    assert data["axiom"] == "T1"
    assert data["witness"] == ["0xb"]


def test_input_checks(grid3: Graph) -> None:
    with pytest.raises(InvalidInputError):
        verify_tangle(complete(4), tangle3_example())
    with pytest.raises(InvalidInputError):
        verify_tangle(complete(9), grid_tangle(3))
    with pytest.raises(GroundSetTooLargeError):
        verify_tangle(grid3, tangle3_example(), max_ground=8)


def test_pool_gives_the_same_report(grid3: Graph) -> None:
    cert = tangle3_example().without(CORNER_TRIPLES[2])
    inline = TangleVerifier().verify(grid3, cert)
    with WorkerPool(2) as pool:
        pooled = TangleVerifier(pool=pool).verify(grid3, cert)
    assert pooled == inline


@pytest.mark.slow
def test_grid4_oracle_sweep() -> None:
    report = TangleVerifier(samples=1_000_000).verify(grid(4), grid_tangle(4))
    assert report
    assert report.mode == "sweep"
