"""Graph width parameters on top of the generic dynamic programs."""

from __future__ import annotations

from typing import TYPE_CHECKING

from mmwidth._exceptions import InvariantViolationError
from mmwidth.cuts import DENSE_MEMO_LIMIT, br_function, mm_function, rank_function
from mmwidth.graph import blocks, is_k_connected
from mmwidth.width._decomposition import BranchDecomposition, TreeBuilder
from mmwidth.width._dp import DP_HARD_MAX, DP_MAX_GROUND, FWidthResult, fwidth_at_most, fwidth_exact

if TYPE_CHECKING:
    from mmwidth.graph import Block, Graph

__all__ = ["brw", "merge_block_decompositions", "mmw", "mmw_at_most", "rw"]


def merge_block_decompositions(
    g: Graph, parts: list[tuple[Block, BranchDecomposition]]
) -> BranchDecomposition:
    """Combine decompositions of the blocks of ``g`` into one of ``g``.

    Blocks are added one at a time; a block meeting the part built so
    far shares exactly one cut vertex ``v``, and its tree minus the leaf
    of ``v`` is hung off the leaf edge of ``v``. Blocks of a new
    component are hung off any existing leaf. No cut value exceeds the
    maximum over the blocks, or 1.
    """
    if g.n == 0:
        return BranchDecomposition.empty()
    host: TreeBuilder | None = None
    covered = 0
    pending = list(parts)
    while pending:
        index = next((i for i, (b, _) in enumerate(pending) if _mask(b) & covered), 0)
        block, d = pending.pop(index)
        guest = TreeBuilder.from_decomposition(d, block.vertices)
        shared = _mask(block) & covered
        if host is None:
            host = guest
        elif shared:
            v = shared.bit_length() - 1
            guest.remove_leaf(v)
            host.graft(v, guest)
        else:
            host.graft(min(host.leaf), guest)
        covered |= _mask(block)
    if host is None or covered != g.vertices:
        raise InvariantViolationError("blocks do not cover the graph")
    return host.build()


def _mask(block: Block) -> int:
    mask = 0
    for v in block.vertices:
        mask |= 1 << v
    return mask


def mmw(
    g: Graph,
    *,
    allow_override: bool = False,
    max_ground: int = DP_MAX_GROUND,
    hard_max: int = DP_HARD_MAX,
    dense_limit: int = DENSE_MEMO_LIMIT,
) -> FWidthResult:
    """Exact maximum matching width.

    The width of a graph is the maximum over its blocks, so each block
    is solved separately and the witnesses are merged.

    Raises
    ------
    GroundSetTooLargeError
        If a block has more vertices than the applicable cap.
    """
    parts = blocks(g)
    if len(parts) == 1 and parts[0].graph.n == g.n:
        return fwidth_exact(
            mm_function(g, dense_limit=dense_limit),
            allow_override=allow_override,
            max_ground=max_ground,
            hard_max=hard_max,
        )
    solved = []
    width = 0
    for block in parts:
        result = fwidth_exact(
            mm_function(block.graph, dense_limit=dense_limit),
            allow_override=allow_override,
            max_ground=max_ground,
            hard_max=hard_max,
        )
        width = max(width, result.width)
        solved.append((block, result.witness))
    witness = merge_block_decompositions(g, solved)
    achieved = witness.width_of(mm_function(g))
    if achieved != width:
        raise InvariantViolationError(f"merged witness attains {achieved}, blocks give {width}")
    return FWidthResult(width, witness, "mm")


def mmw_at_most(
    g: Graph,
    w: int,
    *,
    max_ground: int = DP_MAX_GROUND,
    hard_max: int = DP_HARD_MAX,
) -> BranchDecomposition | None:
    """Decide ``mmw(g) <= w`` block by block, returning a witness when it holds.

    For ``w <= 2`` a 3-connected block on seven or more vertices is
    rejected outright, since three disjoint paths between the two sides
    of a balanced edge force width 3.
    """
    solved = []
    for block in blocks(g):
        if w <= 2 and block.graph.n >= 7 and is_k_connected(block.graph, 3):
            return None
        d = fwidth_at_most(
            mm_function(block.graph, cap=w + 1), w, max_ground=max_ground, hard_max=hard_max
        )
        if d is None:
            return None
        solved.append((block, d))
    return merge_block_decompositions(g, solved)


def brw(
    g: Graph,
    *,
    allow_override: bool = False,
    max_ground: int = DP_MAX_GROUND,
    hard_max: int = DP_HARD_MAX,
    dense_limit: int = DENSE_MEMO_LIMIT,
) -> FWidthResult:
    """Exact branch-width; the ground set is ``g.edges()``."""
    return fwidth_exact(
        br_function(g, dense_limit),
        allow_override=allow_override,
        max_ground=max_ground,
        hard_max=hard_max,
    )


def rw(
    g: Graph,
    *,
    allow_override: bool = False,
    max_ground: int = DP_MAX_GROUND,
    hard_max: int = DP_HARD_MAX,
    dense_limit: int = DENSE_MEMO_LIMIT,
) -> FWidthResult:
    """Exact rank-width."""
    return fwidth_exact(
        rank_function(g, dense_limit),
        allow_override=allow_override,
        max_ground=max_ground,
        hard_max=hard_max,
    )
