from __future__ import annotations

from mmwidth.cli._commands import (
    cmd_goodpair,
    cmd_minor,
    cmd_obstructions,
    cmd_tangle,
    cmd_treerep,
    cmd_width,
)
from mmwidth.cli._main import EXIT_CODES, build_parser, exit_code, main
from mmwidth.cli._sources import load_graph, read_graph_file

__all__ = [
    "EXIT_CODES",
    "build_parser",
    "cmd_goodpair",
    "cmd_minor",
    "cmd_obstructions",
    "cmd_tangle",
    "cmd_treerep",
    "cmd_width",
    "exit_code",
    "load_graph",
    "main",
    "read_graph_file",
]
