from __future__ import annotations

from mmwidth.obstructions._bases import (
    BASE_SIZES,
    base_graphs,
    base_label,
    family_of,
    is_edge_minimal_3_connected,
)
from mmwidth.obstructions._check import (
    CROSSCHECK_MAX_N,
    CheckReport,
    CrosscheckReport,
    check_catalog,
    crosscheck_small,
    random_classes,
    twins,
)
from mmwidth.obstructions._filter import (
    ObstructionRecord,
    Verdict,
    classify_candidate,
    family_tag,
    filter_obstruction,
    make_record,
    width_at_most,
)
from mmwidth.obstructions._patterns import (
    Op,
    SubdivisionPattern,
    all_patterns,
    apply_pattern,
    edge_permutations,
    lower_covers,
    orbit_key,
    upper_covers,
)
from mmwidth.obstructions._pipeline import (
    PRINTED_TOTALS,
    CatalogPipeline,
    CatalogSummary,
    assemble_catalog,
    summarize,
)
from mmwidth.obstructions._sides import eleven_triples, good_sides, is_gadget_component
from mmwidth.obstructions._store import (
    CATALOG_G6,
    CATALOG_JSON,
    read_catalog,
    read_graphs,
    write_catalog,
)
from mmwidth.obstructions._stream import CandidateStream

__all__ = [
    "BASE_SIZES",
    "CATALOG_G6",
    "CATALOG_JSON",
    "CROSSCHECK_MAX_N",
    "PRINTED_TOTALS",
    "CandidateStream",
    "CatalogPipeline",
    "CatalogSummary",
    "CheckReport",
    "CrosscheckReport",
    "ObstructionRecord",
    "Op",
    "SubdivisionPattern",
    "Verdict",
    "all_patterns",
    "apply_pattern",
    "assemble_catalog",
    "base_graphs",
    "base_label",
    "check_catalog",
    "classify_candidate",
    "crosscheck_small",
    "edge_permutations",
    "eleven_triples",
    "family_of",
    "family_tag",
    "filter_obstruction",
    "good_sides",
    "is_edge_minimal_3_connected",
    "is_gadget_component",
    "lower_covers",
    "make_record",
    "orbit_key",
    "random_classes",
    "read_catalog",
    "read_graphs",
    "summarize",
    "twins",
    "upper_covers",
    "width_at_most",
    "write_catalog",
]
