from __future__ import annotations

from mmwidth.graph import complete, cycle, is_isomorphic
from mmwidth.obstructions import (
    Op,
    SubdivisionPattern,
    apply_pattern,
    eleven_triples,
    good_sides,
    is_gadget_component,
    twins,
)

K4 = complete(4)


def _k4_with(op: Op) -> SubdivisionPattern:
    return SubdivisionPattern.plain(K4).with_op(0, op)


def test_single_subdivision_has_one_good_side() -> None:
    g = apply_pattern(_k4_with(Op.S1))
    assert good_sides(g) == [0b10011]
    assert eleven_triples(g) == []


def test_path_gadget_component() -> None:
    g = apply_pattern(_k4_with(Op.S2))
    assert is_gadget_component(g, 0b110000, 0, 1)
    assert not is_gadget_component(g, 0b001100, 0, 1)
    # the pair around each middle vertex cuts it off as a one-vertex gadget
    assert good_sides(g) == [0b110001, 0b110010, 0b110011]


def test_parallel_paths() -> None:
    g = apply_pattern(_k4_with(Op.S11))
    assert eleven_triples(g) == [(0, 4, 1), (0, 5, 1)]
    assert good_sides(g) == [0b110011]


def test_cycle_has_no_good_side() -> None:
    # both sides of every 2-cut of the 4-cycle are gadgets
    assert good_sides(cycle(4)) == []


def test_three_connected_graphs_have_no_sides() -> None:
    assert good_sides(K4) == []
    assert eleven_triples(K4) == []
    assert twins(K4) == []


def test_twins_swap_path_and_parallel_gadgets() -> None:
    path = apply_pattern(_k4_with(Op.S2))
    parallel = apply_pattern(_k4_with(Op.S11))
    (from_path,) = twins(path)
    (from_parallel,) = twins(parallel)
    assert is_isomorphic(from_path, parallel)
    assert is_isomorphic(from_parallel, path)
