"""Subcommand handlers.

Each handler takes the parsed arguments and the resolved settings and
returns the ``inputs``, ``results`` and ``certificates`` sections of the
JSON report. A failed verification raises `VerificationError` carrying
the report, so the caller can print it and exit with status 5.
"""

from __future__ import annotations

import json
from typing import TYPE_CHECKING, Any

from mmwidth._exceptions import InvalidInputError, NotFoundError, VerificationError
from mmwidth._workers import WorkerPool
from mmwidth.cli._sources import graph_from_args, load_graph
from mmwidth.graph import canonical_graph6, graph6_encode
from mmwidth.minor import has_minor
from mmwidth.obstructions import (
    CatalogPipeline,
    check_catalog,
    crosscheck_small,
    eleven_triples,
    good_sides,
    read_catalog,
    write_catalog,
)
from mmwidth.tangle import (
    TangleCertificate,
    TangleVerifier,
    grid_tangle,
    obstruction_tangle,
    tangle3_example,
)
from mmwidth.treerep import TreeRepresentation, is_good_pair, verify
from mmwidth.width import brw, mmw, rw

if TYPE_CHECKING:
    import argparse
    from pathlib import Path

    from mmwidth.config import Settings
    from mmwidth.graph import Graph

__all__ = [
    "Sections",
    "cmd_goodpair",
    "cmd_minor",
    "cmd_obstructions",
    "cmd_tangle",
    "cmd_treerep",
    "cmd_width",
]

Sections = dict[str, Any]

BUILTIN_TANGLES = ("grid3",)


def _graph_input(g: Graph) -> dict[str, Any]:
    return {"g6": canonical_graph6(g), "n": g.n, "m": g.m}


def _read_json(path: Path) -> Any:
    if not path.is_file():
        raise NotFoundError(f"No file at {path}")
    try:
        return json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"{path} is not valid JSON: {exc}") from exc


def cmd_width(args: argparse.Namespace, settings: Settings) -> Sections:
    """Exact widths of one graph, each with a verified decomposition."""
    g = graph_from_args(args)
    which = ("mmw", "brw", "rw") if args.which == "all" else (args.which,)
    results: dict[str, Any] = {}
    certificates: dict[str, Any] = {}
    solvers = {"mmw": mmw, "brw": brw, "rw": rw}
    for key in which:
        res = solvers[key](
            g,
            allow_override=args.allow_override,
            max_ground=settings.dp_max_ground,
            hard_max=settings.dp_hard_max,
            dense_limit=settings.dense_memo_limit,
        )
        results[key] = res.width
        certificates[key] = res.witness.to_json()
    if args.which == "all":
        results["sandwich"] = results["rw"] <= results["mmw"] <= max(results["brw"], 1)
    return {"inputs": _graph_input(g), "results": results, "certificates": certificates}


def _certificate(args: argparse.Namespace, g: Graph) -> TangleCertificate:
    if args.builtin is not None:
        return tangle3_example()
    if args.grid_small is not None:
        return grid_tangle(args.grid_small)
    if args.obstruction:
        return obstruction_tangle(g, good_sides(g), eleven_triples(g))
    return TangleCertificate.from_json(_read_json(args.cert))


def cmd_tangle(args: argparse.Namespace, settings: Settings) -> Sections:
    """Verify a tangle certificate axiom by axiom."""
    g = graph_from_args(args)
    cert = _certificate(args, g)
    if args.order is not None and args.order != cert.order:
        raise InvalidInputError(f"certificate has order {cert.order}, expected {args.order}")
    with WorkerPool(settings.threads) as pool:
        verifier = TangleVerifier(
            max_ground=settings.tangle_max_ground, pool=pool, seed=settings.sample_seed
        )
        report = verifier.verify(g, cert)
    sections = {
        "inputs": _graph_input(g),
        "results": report.to_json(),
        "certificates": {"tangle": cert.to_json()},
    }
    if not report:
        raise VerificationError(f"tangle fails axiom {report.axiom}", sections)
    return sections


def cmd_minor(args: argparse.Namespace, settings: Settings) -> Sections:
    """Search for a model of ``--minor`` in the input graph."""
    g = graph_from_args(args)
    h = load_graph(args.minor)
    model = has_minor(g, h, budget=settings.minor_budget)
    return {
        "inputs": {"graph": _graph_input(g), "minor": _graph_input(h)},
        "results": {"found": model is not None},
        "certificates": {"model": None if model is None else model.to_json()},
    }


def _obstructions_generate(args: argparse.Namespace, settings: Settings) -> Sections:
    pipeline = CatalogPipeline(settings)
    log = pipeline.logger
    pipeline.sig_base_started.connect(lambda label, n: log.info("base %s on %d vertices", label, n))
    pipeline.sig_tier_finished.connect(
        lambda label, tier, size: log.debug("%s tier %d: %d patterns", label, tier, size)
    )
    records = pipeline.run(args.groups)
    g6_path, json_path = write_catalog(records, args.out)
    return {
        "inputs": {"groups": sorted(args.groups) if args.groups else None},
        "results": pipeline.summary().to_json(),
        "certificates": {"files": [str(g6_path), str(json_path)]},
    }


def _obstructions_check(args: argparse.Namespace, settings: Settings) -> Sections:
    records = read_catalog(args.catalog)
    report = check_catalog(records, settings=settings)
    sections = {
        "inputs": {"catalog": str(args.catalog), "records": len(records)},
        "results": report.to_json(),
        "certificates": {},
    }
    if not report:
        raise VerificationError(f"{len(report.problems)} catalog problem(s)", sections)
    return sections


def _obstructions_crosscheck(args: argparse.Namespace, settings: Settings) -> Sections:
    records = read_catalog(args.catalog)
    report = crosscheck_small(
        [r.graph for r in records], n_max=args.n, sample=args.sample, settings=settings
    )
    sections = {
        "inputs": {"catalog": str(args.catalog), "n_max": args.n, "sample": args.sample},
        "results": report.to_json(),
        "certificates": {},
    }
    if not report:
        raise VerificationError(
            f"{len(report.counterexamples)} counterexample(s) to the obstruction characterization",
            sections,
        )
    return sections


def cmd_obstructions(args: argparse.Namespace, settings: Settings) -> Sections:
    """Dispatch to the catalog actions."""
    handlers = {
        "generate": _obstructions_generate,
        "check": _obstructions_check,
        "crosscheck": _obstructions_crosscheck,
    }
    return handlers[args.action](args, settings)


def cmd_goodpair(args: argparse.Namespace, settings: Settings) -> Sections:
    """Decide whether a vertex pair is good through the gadget auxiliary graph."""
    g = graph_from_args(args)
    verdict = is_good_pair(
        g,
        args.a,
        args.b,
        gadget=args.gadget,
        max_ground=settings.dp_max_ground,
        hard_max=settings.dp_hard_max,
    )
    witness = verdict.witness
    return {
        "inputs": {**_graph_input(g), "pair": [args.a, args.b], "gadget": args.gadget},
        "results": {"good": verdict.good, "aux_mmw": verdict.aux_width},
        "certificates": {"representation": None if witness is None else witness.to_json()},
    }


def cmd_treerep(args: argparse.Namespace, settings: Settings) -> Sections:
    """Verify a tree-representation against the input graph."""
    g = graph_from_args(args)
    rep = TreeRepresentation.from_json(_read_json(args.rep))
    report = verify(g, rep, args.k)
    sections = {
        "inputs": {**_graph_input(g), "g6_given": graph6_encode(g), "k": args.k},
        "results": {"ok": report.ok, "width": report.width, "violation": report.violation},
        "certificates": {},
    }
    if not report:
        raise VerificationError(report.violation or "invalid representation", sections)
    return sections
