from __future__ import annotations

from mmwidth.width._decomposition import (
    BranchDecomposition,
    TreeBuilder,
    enumerate_branch_decompositions,
    width_of,
)
from mmwidth.width._dp import (
    DP_HARD_MAX,
    DP_MAX_GROUND,
    FWidthResult,
    fwidth_at_most,
    fwidth_bruteforce,
    fwidth_exact,
)
from mmwidth.width._graph_widths import brw, merge_block_decompositions, mmw, mmw_at_most, rw
from mmwidth.width._tree import SubcubicTree, balanced_leaf_edge

__all__ = [
    "DP_HARD_MAX",
    "DP_MAX_GROUND",
    "BranchDecomposition",
    "FWidthResult",
    "SubcubicTree",
    "TreeBuilder",
    "balanced_leaf_edge",
    "brw",
    "enumerate_branch_decompositions",
    "fwidth_at_most",
    "fwidth_bruteforce",
    "fwidth_exact",
    "merge_block_decompositions",
    "mmw",
    "mmw_at_most",
    "rw",
    "width_of",
]
