from __future__ import annotations

import random

import networkx as nx
import pytest

from mmwidth import InvalidInputError
from mmwidth.cuts import MatchingCertificate, mm_size, mm_value
from mmwidth.graph import Graph, bits, cycle, enumerate_graphs, grid


def _random_graph(rng: random.Random, n: int) -> Graph:
    p = rng.random()
    edges = [(u, v) for v in range(n) for u in range(v) if rng.random() < p]
    return Graph.from_edges(n, edges)


def _networkx_cut_matching(g: Graph, side: int) -> int:
    cut = nx.Graph()
    cut.add_edges_from(
        (u, v) for u in bits(side) for v in bits(g.adj[u] & g.vertices & ~side)
    )
    return len(nx.max_weight_matching(cut, maxcardinality=True))


def test_c4_adjacent_pair() -> None:
    size, cert = mm_value(cycle(4), 0b0011)
    assert size == 2
    assert cert.verify(cycle(4))


def test_empty_side() -> None:
    size, cert = mm_value(grid(3), 0)
    assert size == 0
    assert cert.cover == 0


def test_grid_line() -> None:
    g = grid(3)
    size, cert = mm_value(g, 0b000000111)
    assert size == 3
    assert cert.verify(g)
    assert cert.cover.bit_count() == 3


def test_side_outside_the_graph() -> None:
    with pytest.raises(InvalidInputError):
        mm_value(cycle(4), 0b10000)
    with pytest.raises(InvalidInputError):
        mm_size(cycle(4), -1)


def test_cap_stops_early() -> None:
    g = grid(3)
    assert mm_size(g, 0b000000111, cap=2) == 2
    assert mm_size(g, 0b000000111, cap=5) == 3


def test_agrees_with_networkx_on_small_graphs() -> None:
    for n in range(1, 6):
        for g in enumerate_graphs(n):
            for side in range(1 << n):
                size, _ = mm_value(g, side)
                assert size == _networkx_cut_matching(g, side)
                assert mm_size(g, side) == size


def test_konig_certificates_on_random_cuts() -> None:
    rng = random.Random(11)
    for _ in range(10_000):
        n = rng.randint(2, 10)
        g = _random_graph(rng, n)
        side = rng.getrandbits(n)
        size, cert = mm_value(g, side)
        assert cert.verify(g)
        assert size == cert.size == cert.cover.bit_count()


def test_certificate_rejects_tampering() -> None:
    g = cycle(4)
    _, cert = mm_value(g, 0b0011)
    shrunk = MatchingCertificate(cert.side, cert.matching[:1], cert.cover)
    assert not shrunk.verify(g)
    uncovered = MatchingCertificate(cert.side, (), 0)
    assert not uncovered.verify(g)
