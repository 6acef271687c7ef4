"""Argument parsing, dispatch and exit codes of the ``mmwidth`` command."""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from dataclasses import replace
from pathlib import Path
from typing import TYPE_CHECKING, Any

from mmwidth._exceptions import (
    BudgetExceededError,
    InvalidInputError,
    InvariantViolationError,
    MMWidthError,
    NotFoundError,
    ResourceLimitError,
    UnsupportedError,
    VerificationError,
)
from mmwidth.cli._commands import (
    BUILTIN_TANGLES,
    cmd_goodpair,
    cmd_minor,
    cmd_obstructions,
    cmd_tangle,
    cmd_treerep,
    cmd_width,
)
from mmwidth.cli._sources import SOURCE_HELP, add_graph_source
from mmwidth.config import resolve_config
from mmwidth.log import set_verbosity

if TYPE_CHECKING:
    from collections.abc import Sequence

__all__ = ["EXIT_CODES", "build_parser", "exit_code", "main"]

logger = logging.getLogger("mmwidth")

EXIT_CODES: tuple[tuple[type[BaseException], int], ...] = (
    (InvalidInputError, 2),
    (NotFoundError, 2),
    (UnsupportedError, 3),
    (ResourceLimitError, 3),
    (BudgetExceededError, 4),
    (InvariantViolationError, 5),
    (VerificationError, 5),
    (MMWidthError, 1),
)
"""Exit status per error class; the first matching entry wins."""


def exit_code(exc: BaseException) -> int:
    """Exit status for ``exc``; ``1`` for anything unlisted."""
    for cls, code in EXIT_CODES:
        if isinstance(exc, cls):
            return code
    return 1


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    """Parser for every subcommand and the global flags."""
    parser = argparse.ArgumentParser(
        prog="mmwidth",
        description="Maximum matching width: exact values, certificates and obstructions.",
    )
    parser.add_argument("--config", type=Path, help="YAML solver configuration")
    parser.add_argument("--threads", type=_positive, help="worker processes")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="warnings and errors only")
    sub = parser.add_subparsers(dest="command", required=True)

    width = sub.add_parser("width", help="exact mm-width, branch-width and rank-width")
    add_graph_source(width)
    width.add_argument("--which", choices=("mmw", "brw", "rw", "all"), default="mmw")
    width.add_argument(
        "--allow-override", action="store_true", help="accept ground sets up to the hard limit"
    )
    width.set_defaults(handler=cmd_width)

    tangle = sub.add_parser("tangle", help="verify a tangle certificate")
    add_graph_source(tangle)
    tangle.add_argument("--order", type=int, help="expected order of the certificate")
    cert = tangle.add_mutually_exclusive_group(required=True)
    cert.add_argument("--builtin", choices=BUILTIN_TANGLES, help="built-in certificate")
    cert.add_argument("--grid-small", type=int, metavar="K", help="grid tangle of order K")
    cert.add_argument("--cert", type=Path, metavar="PATH", help="certificate JSON file")
    cert.add_argument(
        "--obstruction", action="store_true", help="order-3 tangle built from the 2-cuts"
    )
    tangle.set_defaults(handler=cmd_tangle)

    minor = sub.add_parser("minor", help="test minor containment")
    add_graph_source(minor)
    minor.add_argument("--minor", required=True, metavar="SOURCE", help=SOURCE_HELP)
    minor.set_defaults(handler=cmd_minor)

    obstructions = sub.add_parser("obstructions", help="obstruction catalog for mm-width 2")
    actions = obstructions.add_subparsers(dest="action", required=True)
    generate = actions.add_parser("generate", help="regenerate the catalog")
    generate.add_argument("--out", type=Path, default=Path("."), help="output directory")
    generate.add_argument(
        "--groups", type=int, nargs="+", choices=(4, 5, 6, 7), help="base groups to run"
    )
    check = actions.add_parser("check", help="re-verify an existing catalog")
    check.add_argument("--catalog", type=Path, default=Path("."), metavar="PATH")
    crosscheck = actions.add_parser("crosscheck", help="small-graph equivalence sweep")
    crosscheck.add_argument("--catalog", type=Path, default=Path("."), metavar="PATH")
    crosscheck.add_argument("--n", type=int, default=8, help="largest vertex count")
    crosscheck.add_argument(
        "--sample", type=int, default=1000, help="sampled classes at the largest size"
    )
    obstructions.set_defaults(handler=cmd_obstructions)

    goodpair = sub.add_parser("goodpair", help="decide whether a vertex pair is good")
    add_graph_source(goodpair)
    goodpair.add_argument("a", type=int)
    goodpair.add_argument("b", type=int)
    goodpair.add_argument("--gadget", choices=("path", "square"), default="path")
    goodpair.set_defaults(handler=cmd_goodpair)

    treerep = sub.add_parser("treerep", help="verify a tree-representation")
    add_graph_source(treerep)
    treerep.add_argument("--rep", type=Path, required=True, metavar="PATH")
    treerep.add_argument("--k", type=int, help="width bound")
    treerep.set_defaults(handler=cmd_treerep)
    return parser


def _emit(report: dict[str, Any]) -> None:
    sys.stdout.write(json.dumps(report, indent=2, sort_keys=True) + "\n")


def main(argv: Sequence[str] | None = None) -> int:
    """Run the command line and return the exit status."""
    args = build_parser().parse_args(argv)
    if args.verbose:
        set_verbosity(logging.DEBUG)
    elif args.quiet:
        set_verbosity(logging.WARNING)

    command = [args.command, *([args.action] if args.command == "obstructions" else [])]
    start = time.perf_counter()
    try:
        settings = resolve_config(args.config)
        if args.threads is not None:
            settings = replace(settings, threads=args.threads)
        sections = args.handler(args, settings)
    except VerificationError as exc:
        _emit({"command": command, **exc.report, "timing": time.perf_counter() - start})
        logger.error("%s", exc)
        return exit_code(exc)
    except (MMWidthError, OSError, ValueError, KeyError, TypeError) as exc:
        logger.error("%s", exc)
        return exit_code(exc) if isinstance(exc, MMWidthError) else 2
    _emit({"command": command, **sections, "timing": time.perf_counter() - start})
    return 0
