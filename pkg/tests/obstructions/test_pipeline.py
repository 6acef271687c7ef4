from __future__ import annotations

import pytest

from mmwidth.obstructions import (
    PRINTED_TOTALS,
    CatalogPipeline,
    CatalogSummary,
    assemble_catalog,
    check_catalog,
    crosscheck_small,
    summarize,
)


def test_seven_vertex_group() -> None:
    pipeline = CatalogPipeline()
    started: list[tuple[str, int]] = []
    found: list[tuple[str, str]] = []
    pipeline.sig_base_started.connect(lambda name, n: started.append((name, n)))
    pipeline.sig_record_found.connect(lambda family, g6: found.append((family, g6)))

    records = pipeline.run(groups=[7])

    assert len(records) == 5
    assert all(r.family == "O3" and r.graph.n == 7 for r in records)
    assert all(r.tangle is not None for r in records)
    assert len(started) == 5
    assert {g6 for _, g6 in found} == {r.g6 for r in records}
    assert pipeline.candidates == 5

    summary = pipeline.summary()
    assert summary.counts == {"O3": 5}
    assert summary.total == 5
    assert summary.matches == []
    data = summary.to_json()
    assert data["printed_totals"] == list(PRINTED_TOTALS)
    assert data["candidates"] == 5
    assert sum(data["per_base"].values()) == 5
    assert set(data["per_base"]) == {r.base for r in records}
    assert [d["printed"] for d in data["discrepancies"]] == list(PRINTED_TOTALS)
    assert all(d["delta"] == 5 - d["printed"] for d in data["discrepancies"])


def test_running_a_group_twice_adds_nothing() -> None:
    pipeline = CatalogPipeline()
    pipeline.run(groups=[7])
    found: list[str] = []
    pipeline.sig_record_found.connect(lambda _family, g6: found.append(g6))
    assert len(pipeline.run(groups=[7])) == 5
    assert found == []


def test_summarize_counts_families() -> None:
    summary = summarize([], candidates=3, bases=["K4", "K5"])
    assert summary.counts == {}
    assert summary.total == 0
    data = summary.to_json()
    assert data["candidates"] == 3
    assert data["per_base"] == {"K4": 0, "K5": 0}


def test_matching_total_has_no_discrepancy() -> None:
    summary = CatalogSummary({"O3": 42}, 42)
    assert summary.matches == [42]
    assert summary.to_json()["discrepancies"] == []
    assert summary.discrepancies() == [{"printed": 45, "computed": 42, "delta": -3}]


@pytest.mark.slow
def test_full_catalog() -> None:
    records, summary = assemble_catalog()
    assert summary.counts["O3"] == 5
    assert summary.total == len(records)
    assert summary.counts == {"O3": 5, "O4": 10, "O5": 11, "O6": 6}
    assert summary.total == 32
    assert summary.matches == []
    assert [d["delta"] for d in summary.discrepancies()] == [-10, -13]
    per_base = summary.per_base
    assert per_base["K5"] == 0
    assert per_base["K33_plus_e"] == 0
    assert per_base["prism_plus_e"] == 1
    assert sum(per_base.values()) == 32
    assert check_catalog(records)
    assert crosscheck_small([r.graph for r in records])
