from __future__ import annotations

import json
import logging
from typing import TYPE_CHECKING, Any

import pytest

from mmwidth import (
    BudgetExceededError,
    Graph6ParseError,
    GroundSetTooLargeError,
    InvariantViolationError,
    MMWidthError,
    NotFoundError,
    ResourceLimitError,
    VerificationError,
)
from mmwidth.cli import exit_code, load_graph, main, read_graph_file
from mmwidth.graph import cycle, grid
from mmwidth.log import set_verbosity
from mmwidth.obstructions import CATALOG_G6, CATALOG_JSON
from mmwidth.tangle import tangle3_example
from mmwidth.treerep import TreeRepresentation
from mmwidth.width import SubcubicTree

if TYPE_CHECKING:
    from collections.abc import Iterator
    from pathlib import Path

    from pytest import CaptureFixture


@pytest.fixture(autouse=True)
def restore_verbosity() -> Iterator[None]:
    yield
    set_verbosity(logging.INFO)


def _report(capsys: CaptureFixture[str]) -> dict[str, Any]:
    out: dict[str, Any] = json.loads(capsys.readouterr().out)
    return out


@pytest.fixture
def c4_rep(tmp_path: Path) -> Path:
    star = SubcubicTree(4, ((0, 1), (0, 2), (0, 3)))
    rep = TreeRepresentation.from_edge_sets(star, [{0}, {0}, {1}, {1}])
    path = tmp_path / "rep.json"
    path.write_text(json.dumps(rep.to_json()))
    return path


@pytest.mark.parametrize(
    ("exc", "code"),
    [
        (Graph6ParseError("bad", 0), 2),
        (NotFoundError("gone"), 2),
        (GroundSetTooLargeError("dp", 17, 16), 3),
        (ResourceLimitError("stuck"), 3),
        (BudgetExceededError("minor search", 10), 4),
        (InvariantViolationError("broken"), 5),
        (VerificationError("failed"), 5),
        (MMWidthError("other"), 1),
        (RuntimeError("foreign"), 1),
    ],
)
def test_exit_codes(exc: BaseException, code: int) -> None:
    assert exit_code(exc) == code


def test_width_all(capsys: CaptureFixture[str]) -> None:
    assert main(["width", "--graph", "grid:3", "--which", "all"]) == 0
    report = _report(capsys)
    assert report["command"] == ["width"]
    assert report["inputs"]["n"] == 9
    assert report["results"] == {"mmw": 3, "brw": 3, "rw": 2, "sandwich": True}
    assert set(report["certificates"]) == {"mmw", "brw", "rw"}
    assert report["timing"] >= 0


def test_width_from_file(tmp_path: Path, capsys: CaptureFixture[str]) -> None:
    path = tmp_path / "c5.txt"
    path.write_text("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n")
    assert main(["-q", "width", "--file", str(path)]) == 0
    assert _report(capsys)["results"] == {"mmw": 2}


@pytest.mark.parametrize(
    ("argv", "code"),
    [
        (["width", "--graph", "bogus:1"], 2),
        (["width", "--graph", "named:nothing"], 2),
        (["width", "--g6", "~"], 2),
        (["width", "--graph", "named:K17"], 3),
        (["width", "--graph", "named:K21", "--allow-override"], 3),
    ],
)
def test_width_failures(argv: list[str], code: int, capsys: CaptureFixture[str]) -> None:
    assert main(argv) == code
    assert capsys.readouterr().out == ""


def test_builtin_tangle(capsys: CaptureFixture[str]) -> None:
    assert main(["tangle", "--graph", "grid:3", "--builtin", "grid3", "--order", "3"]) == 0
    report = _report(capsys)
    assert report["results"]["ok"] is True
    assert report["certificates"]["tangle"]["mode"] == "explicit"


def test_grid_oracle_tangle(capsys: CaptureFixture[str]) -> None:
    assert main(["tangle", "--graph", "grid:3", "--grid-small", "3"]) == 0
    assert _report(capsys)["results"]["ok"] is True


def test_tampered_tangle_exits_with_report(tmp_path: Path, capsys: CaptureFixture[str]) -> None:
    path = tmp_path / "cert.json"
    path.write_text(json.dumps(tangle3_example().without(0xB).to_json()))
    assert main(["tangle", "--graph", "grid:3", "--cert", str(path)]) == 5
    report = _report(capsys)
    assert report["results"]["ok"] is False
    assert report["results"]["axiom"] == "T1"


def test_tangle_order_mismatch(capsys: CaptureFixture[str]) -> None:
    assert main(["tangle", "--graph", "grid:3", "--builtin", "grid3", "--order", "4"]) == 2


def test_missing_certificate_file(tmp_path: Path) -> None:
    assert main(["tangle", "--graph", "grid:3", "--cert", str(tmp_path / "none.json")]) == 2


def test_minor(capsys: CaptureFixture[str]) -> None:
    assert main(["minor", "--graph", "grid:3", "--minor", "named:C4"]) == 0
    report = _report(capsys)
    assert report["results"]["found"] is True
    assert report["certificates"]["model"] is not None

    assert main(["minor", "--graph", "named:C6", "--minor", "named:K4"]) == 0
    report = _report(capsys)
    assert report["results"]["found"] is False
    assert report["certificates"]["model"] is None


def test_minor_budget_from_environment(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("MMW_BUDGET", "1")
    assert main(["minor", "--graph", "grid:3", "--minor", "named:C4"]) == 4


def test_goodpair(capsys: CaptureFixture[str]) -> None:
    assert main(["goodpair", "--graph", "named:K6", "0", "1"]) == 0
    report = _report(capsys)
    assert report["results"]["good"] is True
    assert report["inputs"]["pair"] == [0, 1]

    assert main(["goodpair", "--graph", "named:K7", "0", "1", "--gadget", "square"]) == 0
    report = _report(capsys)
    assert report["results"]["good"] is False
    assert report["results"]["aux_mmw"] >= 3


def test_treerep(c4_rep: Path, capsys: CaptureFixture[str]) -> None:
    assert main(["treerep", "--graph", "named:C4", "--rep", str(c4_rep), "--k", "2"]) == 0
    report = _report(capsys)
    assert report["results"] == {"ok": True, "width": 2, "violation": None}


def test_treerep_over_bound(c4_rep: Path, capsys: CaptureFixture[str]) -> None:
    assert main(["treerep", "--graph", "named:C4", "--rep", str(c4_rep), "--k", "1"]) == 5
    report = _report(capsys)
    assert report["results"]["ok"] is False
    assert "bound is 1" in report["results"]["violation"]


def test_obstruction_catalog_round(tmp_path: Path, capsys: CaptureFixture[str]) -> None:
    out = tmp_path / "catalog"
    assert main(["obstructions", "generate", "--groups", "7", "--out", str(out)]) == 0
    report = _report(capsys)
    assert report["command"] == ["obstructions", "generate"]
    assert report["results"]["counts"] == {"O3": 5}
    assert len(report["certificates"]["files"]) == 2

    assert main(["obstructions", "check", "--catalog", str(out)]) == 0
    assert _report(capsys)["results"]["checked"] == 5

    argv = ["obstructions", "crosscheck", "--catalog", str(out), "--n", "5", "--sample", "0"]
    assert main(argv) == 0
    assert _report(capsys)["results"]["ok"] is True


def test_config_file(tmp_path: Path, capsys: CaptureFixture[str]) -> None:
    path = tmp_path / "config.yaml"
    path.write_text("schema_version: 1.0\ndp_max_ground: 8\ndp_hard_max: 20\n")
    assert main(["--config", str(path), "width", "--graph", "grid:3"]) == 3
    path.write_text("dp_max_ground: 8\n")
    assert main(["--config", str(path), "width", "--graph", "grid:3"]) == 2


def test_missing_subcommand() -> None:
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == 2


def test_graph_sources(tmp_path: Path) -> None:
    assert load_graph("grid:2") == grid(2)
    assert load_graph("named:C4") == cycle(4)
    assert load_graph("g6:C~").m == 6
    path = tmp_path / "g.g6"
    path.write_text("\nC~\nBw\n")
    assert read_graph_file(path).n == 4
    with pytest.raises(NotFoundError):
        read_graph_file(tmp_path / "none.g6")


def test_generate_is_independent_of_worker_count(tmp_path: Path, capsys: CaptureFixture[str]) -> None:
    outputs = []
    for threads in (1, 4, 8):
        out = tmp_path / f"threads{threads}"
        argv = ["--threads", str(threads), "obstructions", "generate", "--groups", "4", "--out", str(out)]
        assert main(argv) == 0
        results = _report(capsys)["results"]
        outputs.append((results, (out / CATALOG_G6).read_bytes(), (out / CATALOG_JSON).read_bytes()))
    assert outputs[0][0]["counts"] == {"O4": 10}
    assert outputs[1] == outputs[0]
    assert outputs[2] == outputs[0]


def test_goodpair_respects_configured_caps(tmp_path: Path, capsys: CaptureFixture[str]) -> None:
    path = tmp_path / "config.yaml"
    path.write_text("schema_version: 1.0\ndp_max_ground: 6\ndp_hard_max: 20\n")
    assert main(["--config", str(path), "goodpair", "--graph", "named:K6", "0", "1"]) == 3
    assert capsys.readouterr().out == ""
