from __future__ import annotations

from pathlib import Path

import pytest

from mmwidth import InvalidInputError, NotFoundError
from mmwidth.obstructions import (
    CATALOG_G6,
    CATALOG_JSON,
    ObstructionRecord,
    base_graphs,
    make_record,
    read_catalog,
    read_graphs,
    write_catalog,
)


@pytest.fixture
def records() -> list[ObstructionRecord]:
    found = [make_record(g, family="O3") for g in base_graphs()[7][:2]]
    return sorted(found, key=lambda r: r.g6)


def test_write_and_read_back(tmp_path: Path, records: list[ObstructionRecord]) -> None:
    g6_path, json_path = write_catalog(records, tmp_path / "out")
    assert g6_path.name == CATALOG_G6
    assert json_path.name == CATALOG_JSON
    assert g6_path.read_text().splitlines() == [r.g6 for r in records]
    assert read_catalog(tmp_path / "out") == records
    assert read_catalog(json_path) == records


def test_bare_graph6_catalog(tmp_path: Path, records: list[ObstructionRecord]) -> None:
    g6_path, _ = write_catalog(records, tmp_path)
    (tmp_path / CATALOG_JSON).unlink()
    loaded = read_catalog(tmp_path)
    assert [r.graph for r in loaded] == [r.graph for r in records]
    assert all(r.family == "O3" and r.tangle is None for r in loaded)
    assert read_catalog(g6_path) == loaded


def test_read_graphs_skips_blank_lines(tmp_path: Path) -> None:
    path = tmp_path / "mixed.g6"
    path.write_text("Bw\n\n  C~\n")
    assert [g.n for g in read_graphs(path)] == [3, 4]


def test_missing_files(tmp_path: Path) -> None:
    with pytest.raises(NotFoundError):
        read_graphs(tmp_path / "absent.g6")
    with pytest.raises(NotFoundError):
        read_catalog(tmp_path)


@pytest.mark.parametrize("text", ["{not json", '{"g6": "Bw"}'])
def test_malformed_json(tmp_path: Path, text: str) -> None:
    path = tmp_path / CATALOG_JSON
    path.write_text(text)
    with pytest.raises(InvalidInputError):
        read_catalog(path)
