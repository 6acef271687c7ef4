from __future__ import annotations

import pytest

from mmwidth.graph import canonical_graph6, complete, cycle, is_k_connected, named
from mmwidth.obstructions import (
    BASE_SIZES,
    base_graphs,
    base_label,
    family_of,
    is_edge_minimal_3_connected,
)


@pytest.mark.parametrize(("n", "count"), [(4, 1), (5, 3), (6, 17), (7, 5)])
def test_group_sizes(n: int, count: int) -> None:
    assert len(base_graphs()[n]) == count


def test_groups_are_three_connected() -> None:
    groups = base_graphs()
    assert sorted(groups) == [*BASE_SIZES, 7]
    for n, graphs in groups.items():
        assert all(g.n == n and is_k_connected(g, 3) for g in graphs)
    assert all(is_edge_minimal_3_connected(g) for g in groups[7])


def test_edge_minimality() -> None:
    assert is_edge_minimal_3_connected(complete(4))
    assert is_edge_minimal_3_connected(named("prism"))
    assert not is_edge_minimal_3_connected(complete(5))
    assert not is_edge_minimal_3_connected(cycle(5))


def test_labels() -> None:
    assert base_label(complete(4)) == "K4"
    assert base_label(named("prism")) == "prism"
    odd = named("W6")
    assert base_label(odd) == "W6"
    plain = cycle(7)
    assert base_label(plain) in ("C7", canonical_graph6(plain))


def test_family_of() -> None:
    assert family_of(complete(4)) == "O4"
    assert family_of(named("prism")) == "O6"
    assert family_of(base_graphs()[7][0]) == "O3"
