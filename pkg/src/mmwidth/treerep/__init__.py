from __future__ import annotations

from mmwidth.treerep._builder import RepBuilder
from mmwidth.treerep._good import (
    Gadget,
    GoodPairVerdict,
    RepPart,
    aux_graph,
    extend_good_rep,
    from_branch_decomposition,
    glue_good,
    glue_three,
    is_good_pair,
    is_good_rep,
    pendant_normalize,
    separate_pair,
)
from mmwidth.treerep._rep import (
    RepReport,
    TreeRepresentation,
    contract_rep,
    intersection_graph,
    is_chordal,
    pad_degree_two,
    verify,
)

__all__ = [
    "Gadget",
    "GoodPairVerdict",
    "RepBuilder",
    "RepPart",
    "RepReport",
    "TreeRepresentation",
    "aux_graph",
    "contract_rep",
    "extend_good_rep",
    "from_branch_decomposition",
    "glue_good",
    "glue_three",
    "intersection_graph",
    "is_chordal",
    "is_good_pair",
    "is_good_rep",
    "pad_degree_two",
    "pendant_normalize",
    "separate_pair",
    "verify",
]
