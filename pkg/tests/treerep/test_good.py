from __future__ import annotations

import itertools
import random

import pytest

from mmwidth import GroundSetTooLargeError, InvalidInputError, InvariantViolationError
from mmwidth.graph import Graph, complete, cycle, enumerate_graphs, named
from mmwidth.treerep import (
    RepPart,
    TreeRepresentation,
    aux_graph,
    extend_good_rep,
    from_branch_decomposition,
    glue_good,
    glue_three,
    is_good_pair,
    is_good_rep,
    pendant_normalize,
    separate_pair,
    verify,
)
from mmwidth.width import SubcubicTree, mmw

STAR = SubcubicTree(4, ((0, 1), (0, 2), (0, 3)))


def _c4_rep() -> TreeRepresentation:
    return TreeRepresentation.from_edge_sets(STAR, [{0}, {0}, {1}, {1}])


def test_aux_graph_gadgets(c4: Graph) -> None:
    h = aux_graph(c4, 0, 1)
    assert h.n == 6
    assert not h.has_edge(0, 1)
    assert h.m == 6
    assert all(h.adj[v].bit_count() == 2 for v in range(6))
    assert h.has_edge(0, 4) and h.has_edge(4, 5) and h.has_edge(5, 1)
    square = aux_graph(c4, 0, 2, "square")
    assert square.m == c4.m + 4
    assert square.adj[4] == square.adj[5] == 0b101
    with pytest.raises(InvalidInputError):
        aux_graph(c4, 1, 1)
    with pytest.raises(InvalidInputError):
        aux_graph(c4, 0, 9)


def test_every_pair_of_k6_is_good(k6: Graph) -> None:
    verdict = is_good_pair(k6, 0, 1)
    assert verdict.good
    assert verdict.aux_width <= 2


def test_c4_pairs_are_good(c4: Graph) -> None:
    for a, b in ((0, 1), (0, 2)):
        verdict = is_good_pair(c4, a, b)
        assert verdict.good
        if verdict.witness is not None:
            assert verify(c4, verdict.witness, 2)
            assert is_good_rep(verdict.witness, a, b)


def test_k7_pair_is_not_good() -> None:
    verdict = is_good_pair(complete(7), 0, 1)
    assert not verdict.good
    assert verdict.aux_width >= 3
    assert verdict.witness is None


def test_square_gadget_verdict_implies_path_verdict() -> None:
    for g in enumerate_graphs(5):
        for a, b in itertools.combinations(range(5), 2):
            path = is_good_pair(g, a, b, budget=0)
            square = is_good_pair(g, a, b, gadget="square")
            assert path.good or not square.good


def test_pendant_normalize() -> None:
    r = _c4_rep()
    assert pendant_normalize(r, 0, 1) is r
    middle = TreeRepresentation.from_edge_sets(
        SubcubicTree(4, ((0, 1), (1, 2), (2, 3))), [{1}, {1}]
    )
    normal = pendant_normalize(middle, 0, 1)
    assert len(normal.tree.edges) == 5
    assert is_good_rep(normal, 0, 1)
    leaves = set(normal.tree.leaves())
    assert any(
        leaves & set(normal.tree.edges[i]) for i in normal.subtrees[0] & normal.subtrees[1]
    )
    with pytest.raises(InvalidInputError):
        pendant_normalize(r, 0, 2)


def test_extend_and_separate(c4: Graph) -> None:
    extended = extend_good_rep(c4, _c4_rep(), 0, 1)
    assert extended.num_vertices == 6
    assert verify(aux_graph(c4, 0, 1), extended, 2)
    back = separate_pair(c4, extended, 0, 1)
    assert back is not None
    assert verify(c4, back, 2)
    assert is_good_rep(back, 0, 1)


def test_extend_needs_a_good_rep(c4: Graph) -> None:
    with pytest.raises(InvalidInputError):
        extend_good_rep(c4, _c4_rep(), 0, 2)


def test_from_branch_decomposition(c4: Graph) -> None:
    rep = from_branch_decomposition(c4, mmw(c4).witness, 2)
    assert rep is not None
    assert verify(c4, rep, 2)
    assert from_branch_decomposition(complete(2), mmw(complete(2)).witness, 2) is not None


def _path_part(vertices: tuple[int, ...], a: int, b: int) -> RepPart:
    # the middle vertex of the path a-x-b only needs to touch the shared node
    order = [vertices.index(a), vertices.index(b)]
    subtrees: list[set[int]] = [set(), set(), set()]
    subtrees[order[0]] = {0}
    subtrees[order[1]] = {0}
    (middle,) = set(range(3)) - set(order)
    subtrees[middle] = {1}
    rep = TreeRepresentation.from_edge_sets(STAR, subtrees)
    return RepPart(vertices, rep, a, b)


def test_glue_good(c4: Graph) -> None:
    first = _path_part((0, 1, 2), 0, 2)
    second = _path_part((0, 2, 3), 0, 2)
    glued = glue_good(c4, first, second)
    assert verify(c4, glued, 2)
    assert is_good_rep(glued, 0, 2)


def test_glue_good_rejects_mismatched_pairs(c4: Graph) -> None:
    first = _path_part((0, 1, 2), 0, 2)
    with pytest.raises(InvalidInputError):
        glue_good(c4, first, RepPart((1, 2, 3), None, 1, 3))
    with pytest.raises(InvalidInputError):
        glue_good(c4, first, RepPart((0, 2), None, 0, 2))


@pytest.mark.parametrize(
    ("g", "parts"),
    [
        (complete(6), [(0, 1), (2, 3), (4, 5)]),
        (named("prism"), [(0, 3), (1, 4), (2, 5)]),
    ],
    ids=["K6", "prism"],
)
def test_glue_three_pairs(g: Graph, parts: list[tuple[int, int]]) -> None:
    rep = glue_three(g, [RepPart(p, None, *p) for p in parts])
    assert verify(g, rep, 2)
    assert rep.width == 2


def test_glue_three_rejects_bad_partitions(k6: Graph) -> None:
    with pytest.raises(InvalidInputError):
        glue_three(k6, [RepPart((0, 1), None, 0, 1), RepPart((2, 3, 4, 5), None, 2, 3)])
    with pytest.raises(InvalidInputError):
        glue_three(
            k6,
            [RepPart((0, 1), None, 0, 1), RepPart((1, 2), None, 1, 2), RepPart((3, 4), None, 3, 4)],
        )
    with pytest.raises(InvalidInputError):
        glue_three(
            k6,
            [RepPart((0, 1, 2), None, 0, 1), RepPart((3,), None, 3, 3), RepPart((4, 5), None, 4, 5)],
        )


def _random_host(
    rng: random.Random, parts: list[tuple[int, ...]], cross: list[tuple[int, int]]
) -> Graph:
    edges = {(u, v) for part in parts for u, v in itertools.combinations(part, 2) if rng.random() < 0.6}
    edges |= {e for e in cross if rng.random() < 0.5}
    n = max(v for part in parts for v in part) + 1
    return Graph.from_edges(n, sorted(edges))


def _good_witness(g: Graph, vertices: tuple[int, ...]) -> TreeRepresentation | None:
    local = RepPart(vertices, None, vertices[0], vertices[1]).graph(g)
    return is_good_pair(local, 0, 1).witness


def test_glue_good_on_random_separations() -> None:
    glued_count = 0
    for seed in range(150):
        rng = random.Random(seed)
        n1, n2 = rng.randint(3, 5), rng.randint(3, 5)
        first = (0, 1, *range(2, n1))
        second = (0, 1, *range(n1, n1 + n2 - 2))
        g = _random_host(rng, [first, second], [])
        reps = [_good_witness(g, first), _good_witness(g, second)]
        if reps[0] is None or reps[1] is None:
            continue
        glued = glue_good(g, RepPart(first, reps[0], 0, 1), RepPart(second, reps[1], 0, 1))
        assert verify(g, glued, 2), seed
        assert is_good_rep(glued, 0, 1)
        glued_count += 1
    assert glued_count > 0


def test_glue_three_on_random_separations() -> None:
    glued_count = 0
    for seed in range(150):
        rng = random.Random(seed)
        parts: list[tuple[int, ...]] = []
        start = 0
        for size in (rng.randint(2, 4) for _ in range(3)):
            parts.append(tuple(range(start, start + size)))
            start += size
        # edges between parts only join separating pairs
        cross = [
            (u, v)
            for i, j in itertools.combinations(range(3), 2)
            for u in parts[i][:2]
            for v in parts[j][:2]
        ]
        g = _random_host(rng, parts, cross)
        pieces = []
        for vertices in parts:
            rep = None if len(vertices) == 2 else _good_witness(g, vertices)
            if rep is None and len(vertices) > 2:
                break
            pieces.append(RepPart(vertices, rep, vertices[0], vertices[1]))
        else:
            rep = glue_three(g, pieces)
            assert verify(g, rep, 2), seed
            glued_count += 1
    assert glued_count > 0


def test_missing_pendant_edge_is_an_invariant_violation(monkeypatch: pytest.MonkeyPatch) -> None:
    middle = TreeRepresentation.from_edge_sets(
        SubcubicTree(4, ((0, 1), (1, 2), (2, 3))), [{1}, {1}]
    )
    monkeypatch.setattr("mmwidth.treerep._good.pendant_normalize", lambda r, a, b: r)
    with pytest.raises(InvariantViolationError):
        extend_good_rep(complete(2), middle, 0, 1)


def test_good_pair_caps_the_auxiliary_graph(k6: Graph) -> None:
    with pytest.raises(GroundSetTooLargeError):
        is_good_pair(k6, 0, 1, max_ground=6)
