from __future__ import annotations

import pytest

from mmwidth import GroundSetTooLargeError, InvalidInputError, InvariantViolationError
from mmwidth.cuts import custom_function, mm_function, rank_function
from mmwidth.graph import Graph, complete, cycle, enumerate_graphs, grid
from mmwidth.width import fwidth_at_most, fwidth_bruteforce, fwidth_exact


@pytest.mark.parametrize(
    ("g", "expected"),
    [
        (Graph.empty(1), 0),
        (complete(2), 1),
        (complete(3), 1),
        (cycle(4), 2),
        (complete(6), 2),
        (grid(2), 2),
        (grid(3), 3),
    ],
)
def test_mm_width_values(g: Graph, expected: int) -> None:
    result = fwidth_exact(mm_function(g))
    assert result.width == expected
    assert result.function == "mm"
    assert result.witness.ground_size == g.n
    assert result.witness.width_of(mm_function(g)) == expected


def test_witness_is_deterministic(grid3: Graph) -> None:
    first = fwidth_exact(mm_function(grid3)).witness
    second = fwidth_exact(mm_function(grid3)).witness
    assert first == second


def test_empty_ground_set() -> None:
    result = fwidth_exact(mm_function(Graph.empty(0)))
    assert result.width == 0
    assert result.witness.ground_size == 0


def test_dp_agrees_with_bruteforce() -> None:
    for n in range(1, 7):
        for g in enumerate_graphs(n):
            assert fwidth_exact(mm_function(g)).width == fwidth_bruteforce(mm_function(g))
            assert fwidth_exact(rank_function(g)).width == fwidth_bruteforce(rank_function(g))


def test_decision_agrees_with_the_exact_width() -> None:
    for g in enumerate_graphs(5):
        width = fwidth_exact(mm_function(g)).width
        for w in range(4):
            witness = fwidth_at_most(mm_function(g, cap=w + 1), w)
            assert (witness is not None) == (width <= w)
            if witness is not None:
                assert witness.width_of(mm_function(g)) <= w


def test_decision_on_the_grid(grid3: Graph) -> None:
    assert fwidth_at_most(mm_function(grid3, cap=3), 2) is None
    witness = fwidth_at_most(mm_function(grid3, cap=4), 3)
    assert witness is not None
    assert witness.width_of(mm_function(grid3)) == 3


def test_negative_bound() -> None:
    with pytest.raises(InvalidInputError):
        fwidth_at_most(mm_function(cycle(4)), -1)


def test_ground_set_cap() -> None:
    with pytest.raises(GroundSetTooLargeError) as info:
        fwidth_exact(mm_function(complete(17)))
    assert info.value.size == 17
    assert info.value.limit == 16
    with pytest.raises(GroundSetTooLargeError):
        fwidth_exact(mm_function(complete(21)), allow_override=True)
    with pytest.raises(GroundSetTooLargeError):
        fwidth_exact(mm_function(cycle(6)), max_ground=5)


def test_asymmetric_function_is_rejected() -> None:
    with pytest.raises(InvariantViolationError):
        fwidth_exact(custom_function(3, lambda s: s & 1))


def test_nonzero_empty_value_is_rejected() -> None:
    with pytest.raises(InvariantViolationError):
        fwidth_exact(custom_function(3, lambda s: 1))


def test_bruteforce_cap() -> None:
    with pytest.raises(GroundSetTooLargeError):
        fwidth_bruteforce(mm_function(complete(9)))


@pytest.mark.slow
def test_grid4_has_width_four() -> None:
    assert fwidth_exact(mm_function(grid(4))).width == 4
