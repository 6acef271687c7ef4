from __future__ import annotations

import random

import pytest

from mmwidth import InvalidInputError
from mmwidth.cuts import (
    br_cut,
    br_function,
    custom_function,
    gf2_rank,
    mm_function,
    rank_cut,
    rank_function,
)
from mmwidth.graph import Graph, complete, cycle, enumerate_graphs, grid, path


def test_mm_function_isolated_vertex() -> None:
    f = mm_function(Graph.from_edges(3, [(0, 1)]))
    assert f(0b100) == 0
    assert f(0) == 0


def test_mm_function_is_symmetric_and_memoized() -> None:
    g = grid(3)
    f = mm_function(g)
    rng = random.Random(3)
    for _ in range(1000):
        s = rng.getrandbits(9)
        assert f(s) == f(f.full ^ s)
    assert f.evaluations <= 256


def test_mm_function_cap() -> None:
    f = mm_function(grid(3), cap=2)
    assert f(0b000000111) == 2
    assert f.name == "mm<=2"


def test_sparse_memo_above_the_dense_limit() -> None:
    f = mm_function(grid(3), dense_limit=4)
    assert f(0b000000111) == 3
    assert f(0b111111000) == 3
    assert f.evaluations == 1


def test_mm_function_is_submodular() -> None:
    g = grid(3)
    f = mm_function(g)
    rng = random.Random(5)
    for _ in range(10_000):
        a = rng.getrandbits(9)
        b = rng.getrandbits(9)
        assert f(a) + f(b) >= f(a | b) + f(a & b)


@pytest.mark.parametrize("name", ["mm", "rank", "br"])
def test_symmetry_exhaustive(name: str) -> None:
    factories = {"mm": mm_function, "rank": rank_function, "br": br_function}
    for g in enumerate_graphs(5):
        f = factories[name](g)
        for s in range(1 << f.ground_size):
            assert f.check_symmetric(s)


def test_br_cut_examples() -> None:
    k3 = complete(3)
    assert br_cut(k3, 0b111) == 0
    assert br_cut(k3, 0b001) == 2
    assert br_cut(path(3), 0b01) == 1
    with pytest.raises(InvalidInputError):
        br_cut(path(3), 0b100)


def test_rank_cut_examples() -> None:
    assert rank_cut(complete(4), 0) == 0
    assert rank_cut(complete(4), 0b0011) == 1
    # adjacent pair of the 4-cycle: identity biadjacency
    assert rank_cut(cycle(4), 0b0011) == 2
    # opposite pair: both rows see both other vertices
    assert rank_cut(cycle(4), 0b0101) == 1
    with pytest.raises(InvalidInputError):
        rank_cut(cycle(4), 0b10000)


def test_gf2_rank() -> None:
    assert gf2_rank([]) == 0
    assert gf2_rank([0b11, 0b11]) == 1
    assert gf2_rank([0b110, 0b011, 0b101]) == 2
    assert gf2_rank([0b100, 0b010, 0b001]) == 3


def test_function_values_match_the_cut_helpers() -> None:
    g = grid(3)
    f = rank_function(g)
    h = br_function(g)
    for s in (0, 0b1, 0b111, 0b101010101):
        assert f(s) == rank_cut(g, s)
    for s in (0, 0b1, 0b111, 0b101010101010 & h.full):
        assert h(s) == br_cut(g, s)


def test_custom_function() -> None:
    f = custom_function(3, lambda s: s.bit_count() % 2)
    assert f(0b001) == 1
    assert f.name == "custom"
    with pytest.raises(InvalidInputError):
        custom_function(-1, lambda s: 0)
