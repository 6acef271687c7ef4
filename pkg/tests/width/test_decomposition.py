from __future__ import annotations

from collections import defaultdict

import pytest

from mmwidth import InvalidInputError, InvariantViolationError
from mmwidth.cuts import custom_function, mm_function
from mmwidth.graph import complete, cycle
from mmwidth.width import (
    BranchDecomposition,
    SubcubicTree,
    balanced_leaf_edge,
    enumerate_branch_decompositions,
    width_of,
)


def _c4_caterpillar() -> BranchDecomposition:
    tree = SubcubicTree(6, ((0, 4), (1, 4), (4, 5), (2, 5), (3, 5)))
    return BranchDecomposition(tree, (0, 1, 2, 3))


def test_zero_function_has_width_zero() -> None:
    d = _c4_caterpillar()
    assert width_of(d, custom_function(4, lambda s: 0)) == 0


def test_single_edge_tree() -> None:
    d = BranchDecomposition(SubcubicTree(2, ((0, 1),)), (0, 1))
    assert width_of(d, mm_function(complete(2))) == 1


def test_caterpillar_over_c4() -> None:
    d = _c4_caterpillar()
    assert d.width_of(mm_function(cycle(4))) == 2
    assert sorted(d.edge_sides()) == [0b0111, 0b1011, 0b1100, 0b1101, 0b1110]


def test_ground_size_mismatch() -> None:
    with pytest.raises(InvalidInputError):
        _c4_caterpillar().width_of(mm_function(complete(5)))


def test_rejects_non_strict_trees() -> None:
    path_tree = SubcubicTree(3, ((0, 1), (1, 2)))
    with pytest.raises(InvalidInputError):
        BranchDecomposition(path_tree, (0, 2))
    with pytest.raises(InvalidInputError):
        BranchDecomposition(SubcubicTree(2, ((0, 1),)), (0, 0))


@pytest.mark.parametrize(
    "edges",
    [((0, 1), (1, 2), (0, 2)), ((0, 1),), ((0, 0), (1, 2))],
)
def test_rejects_non_trees(edges: tuple[tuple[int, int], ...]) -> None:
    with pytest.raises(InvalidInputError):
        SubcubicTree(3, edges)


def test_degree_above_three() -> None:
    with pytest.raises(InvalidInputError):
        SubcubicTree(5, ((0, 1), (0, 2), (0, 3), (0, 4)))


def test_degenerate_ground_sets() -> None:
    assert BranchDecomposition.empty().ground_size == 0
    assert BranchDecomposition.empty().to_newick() == "()"
    (single,) = enumerate_branch_decompositions(1)
    assert single.tree.num_nodes == 1
    assert single.to_newick() == "(0)"
    (pair,) = enumerate_branch_decompositions(2)
    assert pair.to_newick() == "(0,1)"


@pytest.mark.parametrize(("n", "count"), [(3, 1), (4, 3), (5, 15), (6, 105)])
def test_enumeration_counts(n: int, count: int) -> None:
    trees = list(enumerate_branch_decompositions(n))
    assert len(trees) == count
    assert all(t.ground_size == n for t in trees)


def test_json_and_newick() -> None:
    d = _c4_caterpillar()
    again = BranchDecomposition.from_json(d.to_json())
    assert again == d
    assert d.to_newick() == "(0,1,(2,3))"
    with pytest.raises(InvalidInputError):
        BranchDecomposition.from_json({"nodes": 2})


def test_balanced_edge_of_a_single_edge() -> None:
    assert balanced_leaf_edge(SubcubicTree(2, ((0, 1),))) == 0


def test_balanced_edge_of_a_complete_tree() -> None:
    edges = (
        (0, 1), (0, 2), (0, 3), (1, 4), (1, 5),
        (2, 6), (2, 7), (3, 8), (3, 9), (4, 10), (4, 11), (5, 12), (5, 13),
    )  # fmt: skip
    tree = SubcubicTree(14, edges)
    assert balanced_leaf_edge(tree) == 0


def test_balanced_edge_of_a_caterpillar() -> None:
    edges = (
        (0, 1), (1, 2), (2, 3), (3, 4),
        (0, 5), (0, 6), (1, 7), (2, 8), (3, 9), (4, 10), (4, 11),
    )  # fmt: skip
    tree = SubcubicTree(12, edges)
    leaves = set(tree.leaves())
    assert len(leaves) == 7
    side = len(tree.far_side(balanced_leaf_edge(tree)) & leaves)
    assert min(side, 7 - side) >= 3


def test_balanced_edge_needs_two_leaves() -> None:
    with pytest.raises(InvalidInputError):
        balanced_leaf_edge(SubcubicTree(1, ()))


def test_unbalanced_walk_is_an_invariant_violation(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setattr("mmwidth.width._tree._leaf_counts", lambda tree: defaultdict(int))
    with pytest.raises(InvariantViolationError):
        balanced_leaf_edge(SubcubicTree(4, ((0, 1), (0, 2), (0, 3))))
