"""Good pairs and the constructions that glue representations together.

A pair ``(g, {a, b})`` is good when ``g`` has a width-2 representation
in which the subtrees of ``a`` and ``b`` share a tree edge.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import islice, product
from typing import TYPE_CHECKING, Literal

from mmwidth._exceptions import InvalidInputError, InvariantViolationError
from mmwidth.cuts import mm_value
from mmwidth.graph import Graph, add_edges, add_vertices, delete_edge, from_bits
from mmwidth.treerep._builder import RepBuilder
from mmwidth.treerep._rep import TreeRepresentation, verify
from mmwidth.width import DP_HARD_MAX, DP_MAX_GROUND, mmw_at_most

if TYPE_CHECKING:
    from collections.abc import Sequence

    from mmwidth.width import BranchDecomposition

__all__ = [
    "Gadget",
    "GoodPairVerdict",
    "RepPart",
    "aux_graph",
    "extend_good_rep",
    "from_branch_decomposition",
    "glue_good",
    "glue_three",
    "is_good_pair",
    "is_good_rep",
    "pendant_normalize",
    "separate_pair",
]

logger = logging.getLogger("mmwidth")

Gadget = Literal["path", "square"]

WITNESS_BUDGET = 64


@dataclass(frozen=True, slots=True)
class GoodPairVerdict:
    """Decision on a pair ``(g, {a, b})``."""

    good: bool
    aux_width: int
    """Maximum matching width of the auxiliary graph."""
    witness: TreeRepresentation | None = None
    """A good representation of ``g``; only present when one was extracted."""


@dataclass(frozen=True, slots=True)
class RepPart:
    """A piece of a host graph together with a representation of it.

    Local vertex ``i`` of `rep` is host vertex ``vertices[i]``; `a` and
    `b` are host vertices.
    """

    vertices: tuple[int, ...]
    rep: TreeRepresentation | None
    a: int
    b: int

    def local(self, v: int) -> int:
        return self.vertices.index(v)

    def graph(self, host: Graph) -> Graph:
        """The subgraph of ``host`` induced on `vertices`, in local numbering."""
        vs = self.vertices
        return Graph.from_edges(
            len(vs),
            (
                (i, j)
                for i in range(len(vs))
                for j in range(i + 1, len(vs))
                if host.has_edge(vs[i], vs[j])
            ),
        )


def is_good_rep(r: TreeRepresentation, a: int, b: int) -> bool:
    """Width at most 2 and the subtrees of ``a`` and ``b`` share an edge."""
    return r.width <= 2 and r.shares_edge(a, b)


def _pendant_shared_edge(r: TreeRepresentation, a: int, b: int) -> tuple[int, int] | None:
    """A shared ``a``/``b`` edge ``(p, q)`` with ``q`` a leaf, if one exists."""
    degree = r.tree.degrees()
    for i in sorted(r.subtrees[a] & r.subtrees[b]):
        u, v = r.tree.edges[i]
        if degree[v] == 1:
            return u, v
        if degree[u] == 1:
            return v, u
    return None


def _require_pendant_shared_edge(r: TreeRepresentation, a: int, b: int) -> tuple[int, int]:
    found = _pendant_shared_edge(r, a, b)
    if found is None:
        raise InvariantViolationError(f"normalized representation has no pendant edge shared by {a} and {b}")
    return found


def pendant_normalize(r: TreeRepresentation, a: int, b: int) -> TreeRepresentation:
    """Make some edge shared by ``a`` and ``b`` end in a tree leaf.

    The lowest shared edge is subdivided and a new leaf edge, carried by
    ``a`` and ``b`` only, is hung off the new node. Representations that
    already have such an edge are returned unchanged.

    Raises
    ------
    InvalidInputError
        If ``r`` is not good for ``a`` and ``b``.
    """
    if not is_good_rep(r, a, b):
        raise InvalidInputError(f"representation is not good for the pair ({a}, {b})")
    if _pendant_shared_edge(r, a, b) is not None:
        return r
    i = min(r.subtrees[a] & r.subtrees[b])
    builder = RepBuilder.from_rep(r)
    s = builder.subdivide(*r.tree.edges[i])
    _, leaf_edge = builder.add_pendant(s)
    builder.sub[a].add(leaf_edge)
    builder.sub[b].add(leaf_edge)
    return builder.build(range(r.num_vertices))


def aux_graph(g: Graph, a: int, b: int, gadget: Gadget = "path") -> Graph:
    """``g`` without ``ab`` plus new vertices ``c = n`` and ``d = n + 1``.

    The ``"path"`` gadget adds ``a-c-d-b``; the ``"square"`` gadget adds
    ``a-c-b`` and ``a-d-b``.

    Raises
    ------
    InvalidInputError
        If ``a == b`` or either is not a vertex.
    """
    if a == b:
        raise InvalidInputError("the pair needs two distinct vertices")
    if not (0 <= a < g.n and 0 <= b < g.n):
        raise InvalidInputError(f"({a}, {b}) are not vertices of the graph")
    base = delete_edge(g, (a, b)) if g.has_edge(a, b) else g
    c, d = g.n, g.n + 1
    h = add_vertices(base, 2)
    if gadget == "path":
        return add_edges(h, [(a, c), (c, d), (d, b)])
    if gadget == "square":
        return add_edges(h, [(a, c), (c, b), (a, d), (d, b)])
    raise InvalidInputError(f"unknown gadget {gadget!r}")


def extend_good_rep(g: Graph, r: TreeRepresentation, a: int, b: int) -> TreeRepresentation:
    """Width-2 representation of ``aux_graph(g, a, b)`` from a good one of ``g``.

    The pendant shared edge ``p-q`` becomes the path ``p-r-s-q``: ``a``
    keeps only ``p-r``, ``b`` runs along the whole path, ``c`` takes
    ``r-s`` and ``d`` takes ``s-q``.

    Raises
    ------
    InvalidInputError
        If ``r`` is not a good representation of ``g``.
    """
    report = verify(g, r, 2)
    if not report or not r.shares_edge(a, b):
        raise InvalidInputError("representation is not good for the pair")
    r = pendant_normalize(r, a, b)
    p, q = _require_pendant_shared_edge(r, a, b)
    builder = RepBuilder.from_rep(r)
    mid1 = builder.subdivide(p, q)
    mid2 = builder.subdivide(mid1, q)
    builder.sub[a] -= {frozenset((mid1, mid2)), frozenset((mid2, q))}
    builder.sub[g.n] = {frozenset((mid1, mid2))}
    builder.sub[g.n + 1] = {frozenset((mid2, q))}
    out = builder.build(range(g.n + 2))
    check = verify(aux_graph(g, a, b), out, 2)
    if not check:
        raise InvariantViolationError(f"pendant extension failed: {check.violation}")
    return out


def separate_pair(
    g: Graph, rep_h: TreeRepresentation, a: int, b: int
) -> TreeRepresentation | None:
    """Good representation of ``(g, {a, b})`` from a width-2 one of the auxiliary graph.

    ``rep_h`` represents ``aux_graph(g, a, b)``, so ``c = n`` and
    ``d = n + 1``. The subtrees of ``c`` and ``d`` are first merged into
    those of ``a`` and ``b`` in the three possible ways; if none makes
    ``a`` and ``b`` share an edge, the first edge of the path between
    them is subdivided, a leaf edge shared by both is hung there and
    ``b`` is extended along the path.

    Returns
    -------
    TreeRepresentation | None
        A verified good representation, or ``None`` if the input did not
        lead to one.
    """
    c, d = g.n, g.n + 1
    keys = list(range(g.n))
    for join_a, join_b in (((c, d), ()), ((c,), (d,)), ((), (c, d))):
        builder = RepBuilder.from_rep(rep_h)
        for x in join_a:
            builder.sub[a] |= builder.sub[x]
        for x in join_b:
            builder.sub[b] |= builder.sub[x]
        if builder.sub[a] & builder.sub[b]:
            candidate = builder.build(keys)
            if verify(g, candidate, 2) and candidate.shares_edge(a, b):
                return candidate

    builder = RepBuilder.from_rep(rep_h)
    v1, v2 = builder.closest_pair(builder.nodes_of(a), builder.nodes_of(b))
    if v1 != v2:
        first = builder.path(v1, v2)[0]
        (u,) = first - {v1}
        v3 = builder.subdivide(v1, u)
    else:
        v3 = v1
    _, shared = builder.add_pendant(v3)
    if v3 != v1:
        builder.sub[a].add(frozenset((v1, v3)))
    builder.sub[a].add(shared)
    builder.sub[b].add(shared)
    builder.sub[b].update(builder.path(v3, v2))
    try:
        candidate = builder.build(keys)
    except InvalidInputError:
        return None
    if verify(g, candidate, 2) and candidate.shares_edge(a, b):
        return candidate
    return None


def _steiner_edges(builder: RepBuilder, root: int, targets: set[int]) -> set[frozenset[int]]:
    edges: set[frozenset[int]] = set()
    for t in sorted(targets):
        edges.update(builder.path(root, t))
    return edges


def from_branch_decomposition(
    g: Graph, d: BranchDecomposition, k: int, budget: int = WITNESS_BUDGET
) -> TreeRepresentation | None:
    """Try to turn a branch-decomposition into a width-``k`` representation.

    Each tree edge gets a minimum vertex cover of its cut (one König
    cover from each side); the subtree of ``v`` is the smallest subtree
    holding the leaf edge of ``v`` and every edge whose cover contains
    ``v``. Up to ``budget`` cover combinations are tried.

    Returns
    -------
    TreeRepresentation | None
        The first verified representation of width at most ``k``.
    """
    if g.n <= 2:
        builder = RepBuilder()
        x, y = builder.new_node(), builder.new_node()
        e = builder.connect(x, y)
        for v in range(g.n):
            builder.sub[v] = {e}
        rep = builder.build(range(g.n))
        return rep if verify(g, rep, k) else None

    tree = d.tree
    options: list[list[int]] = []
    for side in d.edge_sides():
        _, from_side = mm_value(g, side)
        _, from_other = mm_value(g, g.vertices & ~side)
        covers = [from_side.cover]
        if from_other.cover != from_side.cover:
            covers.append(from_other.cover)
        options.append(covers)

    base = RepBuilder()
    for _ in range(tree.num_nodes):
        base.new_node()
    for u, v in tree.edges:
        base.connect(u, v)
    edge_sets = [frozenset(e) for e in tree.edges]

    for choice in islice(product(*options), budget):
        builder = RepBuilder()
        builder.adj = base.adj
        for v in range(g.n):
            leaf = d.leaf_of[v]
            targets = {x for i, cover in enumerate(choice) if cover >> v & 1 for x in tree.edges[i]}
            sub = _steiner_edges(builder, leaf, targets)
            sub.add(next(e for e in edge_sets if leaf in e))
            builder.sub[v] = sub
        rep = builder.build(range(g.n))
        if verify(g, rep, k):
            return rep
    return None


def _smallest_width(h: Graph, max_ground: int, hard_max: int) -> tuple[int, BranchDecomposition]:
    w = 0
    while True:
        witness = mmw_at_most(h, w, max_ground=max_ground, hard_max=hard_max)
        if witness is not None:
            return w, witness
        w += 1


def is_good_pair(
    g: Graph,
    a: int,
    b: int,
    *,
    gadget: Gadget = "path",
    budget: int = WITNESS_BUDGET,
    max_ground: int = DP_MAX_GROUND,
    hard_max: int = DP_HARD_MAX,
) -> GoodPairVerdict:
    """Decide whether ``(g, {a, b})`` is good.

    The pair is good exactly when the path-gadget auxiliary graph has
    maximum matching width at most 2. The square gadget only certifies
    goodness; a bad pair always gives it width 3 or more, but the
    converse is not claimed. With the path gadget a good
    representation of ``g`` is also sought, best effort.

    ``max_ground`` and ``hard_max`` cap the blocks of the auxiliary
    graph as in `mmwidth.width.mmw_at_most`.

    Raises
    ------
    InvalidInputError
        If ``a == b``.
    GroundSetTooLargeError
        If a block of the auxiliary graph is over the cap.
    """
    h = aux_graph(g, a, b, gadget)
    width, decomposition = _smallest_width(h, max_ground, hard_max)
    if width > 2:
        return GoodPairVerdict(False, width)
    witness = None
    if gadget == "path" and budget > 0:
        rep_h = from_branch_decomposition(h, decomposition, 2, budget)
        if rep_h is not None:
            witness = separate_pair(g, rep_h, a, b)
    if witness is None:
        logger.debug("no good representation extracted for pair (%d, %d)", a, b)
    return GoodPairVerdict(True, width, witness)


def _trivial_part(part: RepPart) -> tuple[RepBuilder, int]:
    builder = RepBuilder()
    x, leaf = builder.new_node(), builder.new_node()
    e = builder.connect(x, leaf)
    for v in part.vertices:
        builder.sub[v] = {e}
    return builder, leaf


def _good_part(host: Graph, part: RepPart) -> tuple[RepBuilder, frozenset[int]]:
    """Validate ``part`` and return it keyed by host vertex, plus a shared a/b edge."""
    if part.rep is None:
        raise InvalidInputError("part has no representation")
    local = part.graph(host)
    la, lb = part.local(part.a), part.local(part.b)
    report = verify(local, part.rep, 2)
    if not report:
        raise InvalidInputError(f"part representation is invalid: {report.violation}")
    if not part.rep.shares_edge(la, lb):
        raise InvalidInputError(f"part is not good for the pair ({part.a}, {part.b})")
    i = min(part.rep.subtrees[la] & part.rep.subtrees[lb])
    builder = RepBuilder.from_rep(part.rep, part.vertices)
    return builder, frozenset(part.rep.tree.edges[i])


def glue_good(g: Graph, first: RepPart, second: RepPart) -> TreeRepresentation:
    """Representation of ``g`` from good representations of two sides of ``{a, b}``.

    An edge shared by ``a`` and ``b`` is subdivided in each part and the
    two new nodes are joined by an edge carried by ``a`` and ``b``. The
    result is again good for ``{a, b}``.

    Raises
    ------
    InvalidInputError
        If the parts do not meet exactly in ``{a, b}``, do not cover
        ``g``, are joined by an edge of ``g`` or are not good.
    """
    a, b = first.a, first.b
    if {second.a, second.b} != {a, b}:
        raise InvalidInputError("both parts must be glued at the same pair")
    mask_a, mask_b = from_bits(first.vertices), from_bits(second.vertices)
    pair = 1 << a | 1 << b
    if mask_a & mask_b != pair or mask_a | mask_b != g.vertices:
        raise InvalidInputError("parts must cover the graph and meet exactly in the pair")
    if g.neighborhood(mask_a & ~pair) & ~mask_a:
        raise InvalidInputError("the pair does not separate the two parts")

    left, e_left = _good_part(g, first)
    right, e_right = _good_part(g, second)
    s_left = left.subdivide(*sorted(e_left))
    s_right = right.subdivide(*sorted(e_right))
    remap = left.absorb(right)
    bridge = left.connect(s_left, remap[s_right])
    left.sub[a].add(bridge)
    left.sub[b].add(bridge)
    out = left.build(range(g.n))
    report = verify(g, out, 2)
    if not report:
        raise InvariantViolationError(f"glued representation fails: {report.violation}")
    return out


def glue_three(g: Graph, parts: Sequence[RepPart]) -> TreeRepresentation:
    """Width-2 representation of ``g`` from three separated pieces.

    The parts partition the vertices and each ``{a_i, b_i}`` separates
    its part from the rest. Parts of at most two vertices may omit their
    representation. Every part is pendant-normalized and the three
    pendant leaves are identified into one node.

    Raises
    ------
    InvalidInputError
        If the parts do not partition ``g``, a part is empty or not
        separated by its pair, or a representation is not good.
    """
    if len(parts) != 3:
        raise InvalidInputError(f"expected three parts, got {len(parts)}")
    seen = 0
    for part in parts:
        if not part.vertices:
            raise InvalidInputError("parts must be nonempty")
        mask = from_bits(part.vertices)
        if mask & seen:
            raise InvalidInputError("parts overlap")
        seen |= mask
        if part.a not in part.vertices or part.b not in part.vertices:
            raise InvalidInputError("a part's pair must lie inside the part")
        inner = mask & ~(1 << part.a | 1 << part.b)
        if g.neighborhood(inner) & ~mask:
            raise InvalidInputError(f"pair ({part.a}, {part.b}) does not separate its part")
    if seen != g.vertices:
        raise InvalidInputError("parts do not cover the graph")

    pieces: list[tuple[RepBuilder, int]] = []
    for part in parts:
        if part.rep is None:
            if len(part.vertices) > 2:
                raise InvalidInputError("parts above two vertices need a representation")
            pieces.append(_trivial_part(part))
            continue
        la, lb = part.local(part.a), part.local(part.b)
        local = part.graph(g)
        if not verify(local, part.rep, 2) or not part.rep.shares_edge(la, lb):
            raise InvalidInputError(f"part is not good for the pair ({part.a}, {part.b})")
        normal = pendant_normalize(part.rep, la, lb)
        _, leaf = _require_pendant_shared_edge(normal, la, lb)
        pieces.append((RepBuilder.from_rep(normal, part.vertices), leaf))

    host, hub = pieces[0]
    for builder, leaf in pieces[1:]:
        remap = host.absorb(builder)
        host.identify(hub, remap[leaf])
    out = host.build(range(g.n))
    report = verify(g, out, 2)
    if not report:
        raise InvariantViolationError(f"glued representation fails: {report.violation}")
    return out
