"""On-disk catalog: one graph6 per line plus a JSON file of records."""

from __future__ import annotations

import json
from pathlib import Path
from typing import TYPE_CHECKING

from mmwidth._exceptions import InvalidInputError, NotFoundError
from mmwidth.graph import graph6_decode
from mmwidth.obstructions._filter import ObstructionRecord, family_tag

if TYPE_CHECKING:
    from collections.abc import Sequence

    from mmwidth.graph import Graph

__all__ = ["CATALOG_G6", "CATALOG_JSON", "read_catalog", "read_graphs", "write_catalog"]

CATALOG_G6 = "obstructions.g6"
CATALOG_JSON = "obstructions.json"


def write_catalog(records: Sequence[ObstructionRecord], directory: Path) -> tuple[Path, Path]:
    """Write ``obstructions.g6`` (sorted) and ``obstructions.json`` into ``directory``."""
    directory.mkdir(parents=True, exist_ok=True)
    g6_path = directory / CATALOG_G6
    json_path = directory / CATALOG_JSON
    g6_path.write_text("".join(f"{line}\n" for line in sorted(r.g6 for r in records)))
    with open(json_path, "w") as fh:
        json.dump([r.to_json() for r in records], fh, indent=2)
        fh.write("\n")
    return g6_path, json_path


def read_graphs(path: Path) -> list[Graph]:
    """Graphs of a graph6 file, one per non-empty line.

    Raises
    ------
    NotFoundError
        If ``path`` does not exist.
    Graph6ParseError
        If a line is not valid graph6.
    """
    if not path.is_file():
        raise NotFoundError(f"No graph6 file at {path}")
    lines = (line.strip() for line in path.read_text().splitlines())
    return [graph6_decode(line) for line in lines if line and not line.startswith(">>")]


def read_catalog(path: Path) -> list[ObstructionRecord]:
    """Load a catalog from a directory, a JSON record file or a bare graph6 file.

    Bare graph6 input yields records with no pattern, tangle or minor list.
    """
    if path.is_dir():
        json_path = path / CATALOG_JSON
        path = json_path if json_path.is_file() else path / CATALOG_G6
    if not path.is_file():
        raise NotFoundError(f"No catalog at {path}")
    if path.suffix == ".json":
        try:
            data = json.loads(path.read_text())
        except json.JSONDecodeError as exc:
            raise InvalidInputError(f"{path} is not valid JSON: {exc}") from exc
        if not isinstance(data, list):
            raise InvalidInputError(f"{path} must hold a list of records")
        return [ObstructionRecord.from_json(item) for item in data]
    return [ObstructionRecord(graph=g, family=family_tag(g)) for g in read_graphs(path)]
