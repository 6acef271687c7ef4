"""Graph sources shared by every subcommand."""

from __future__ import annotations

from pathlib import Path
from typing import TYPE_CHECKING

from mmwidth._exceptions import InvalidInputError, NotFoundError
from mmwidth.graph import edge_list_decode, graph6_decode, grid, named

if TYPE_CHECKING:
    import argparse

    from mmwidth.graph import Graph

__all__ = ["add_graph_source", "graph_from_args", "load_graph", "read_graph_file"]

SOURCE_HELP = "graph source: grid:<k>, named:<name>, g6:<text> or file:<path>"


def read_graph_file(path: Path) -> Graph:
    """First graph of a file, as graph6 or as an ``"n m"`` edge list.

    A first non-blank line made of two integers selects the edge-list
    format.

    Raises
    ------
    NotFoundError
        If the file does not exist.
    """
    if not path.is_file():
        raise NotFoundError(f"No graph file at {path}")
    text = path.read_text()
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines:
        raise InvalidInputError(f"{path} is empty")
    if all(tok.isdigit() for tok in lines[0].split()) and len(lines[0].split()) == 2:
        return edge_list_decode(text)
    return graph6_decode(lines[0])


def load_graph(source: str) -> Graph:
    """Resolve a source string into a graph.

    Raises
    ------
    InvalidInputError
        If the prefix is unknown or the payload is malformed.
    NotFoundError
        If a named graph or a file does not exist.
    """
    kind, sep, payload = source.partition(":")
    if not sep:
        raise InvalidInputError(f"graph source {source!r} has no kind prefix; {SOURCE_HELP}")
    if kind == "grid":
        try:
            return grid(int(payload))
        except ValueError as exc:
            raise InvalidInputError(f"grid size must be an integer, got {payload!r}") from exc
    if kind == "named":
        return named(payload)
    if kind == "g6":
        return graph6_decode(payload)
    if kind == "file":
        return read_graph_file(Path(payload))
    raise InvalidInputError(f"unknown graph source kind {kind!r}; {SOURCE_HELP}")


def add_graph_source(parser: argparse.ArgumentParser, *, required: bool = True) -> None:
    """Add the mutually exclusive ``--graph``, ``--g6`` and ``--file`` options."""
    group = parser.add_mutually_exclusive_group(required=required)
    group.add_argument("--graph", metavar="SOURCE", help=SOURCE_HELP)
    group.add_argument("--g6", metavar="TEXT", help="graph6 text")
    group.add_argument("--file", type=Path, metavar="PATH", help="graph6 or edge-list file")


def graph_from_args(args: argparse.Namespace) -> Graph:
    """Graph given by whichever source option was set."""
    if args.g6 is not None:
        return graph6_decode(args.g6)
    if args.file is not None:
        return read_graph_file(args.file)
    return load_graph(args.graph)
