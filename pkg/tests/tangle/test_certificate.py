from __future__ import annotations

import pytest

from mmwidth import InvalidInputError
from mmwidth.graph import grid
from mmwidth.tangle import (
    SmallSetOracle,
    TangleCertificate,
    grid_tangle,
    is_small,
    obstruction_tangle,
    tangle3_example,
)

CORNER = 0b000001011


def test_tangle3_members() -> None:
    cert = tangle3_example()
    assert cert.order == 3
    assert cert.ground_size == 9
    assert cert.mode == "explicit"
    assert cert.sets is not None
    # nine singletons, 36 pairs and four corner triples
    assert len(cert.sets) == 9 + 36 + 4
    assert cert.membership(0)
    assert cert.membership(CORNER)
    assert not cert.membership(0b000000111)


def test_tangle3_members_are_small() -> None:
    cert = tangle3_example()
    assert cert.sets is not None
    assert all(is_small(3, s) for s in cert.sets)


def test_grid_oracle() -> None:
    cert = grid_tangle(3)
    assert cert.mode == "oracle"
    assert cert.membership(CORNER)
    assert not cert.membership(0b000000111)
    assert not cert.membership(0b111111111)
    with pytest.raises(InvalidInputError):
        grid_tangle(1)


def test_exactly_one_source() -> None:
    with pytest.raises(InvalidInputError):
        TangleCertificate(3, 9)
    with pytest.raises(InvalidInputError):
        TangleCertificate(3, 9, frozenset({1}), SmallSetOracle(3))
    with pytest.raises(InvalidInputError):
        TangleCertificate(3, 16, oracle=SmallSetOracle(3))


@pytest.mark.parametrize("bad", [0, 0b111, 0b1000])
def test_listed_sets_must_be_proper(bad: int) -> None:
    with pytest.raises(InvalidInputError):
        TangleCertificate(1, 3, frozenset({bad}))


def test_without() -> None:
    cert = tangle3_example().without(CORNER)
    assert not cert.membership(CORNER)
    with pytest.raises(InvalidInputError):
        grid_tangle(3).without(CORNER)


def test_json() -> None:
    cert = tangle3_example()
    data = cert.to_json()
    assert data["mode"] == "explicit"
    assert "0xb" in data["sets"]
    assert TangleCertificate.from_json(data) == cert
    oracle = grid_tangle(4).to_json()
    assert oracle["oracle"] == {"kind": "grid-small", "k": 4}
    assert TangleCertificate.from_json(oracle) == grid_tangle(4)


@pytest.mark.parametrize(
    "data",
    [
        {"order": 3, "mode": "bogus"},
        {"order": 3, "mode": "oracle", "oracle": {"kind": "other", "k": 3}},
        {"order": 3, "mode": "explicit", "ground": 9, "sets": ["zz"]},
        {"mode": "explicit"},
    ],
)
def test_malformed_json(data: dict[str, object]) -> None:
    with pytest.raises(InvalidInputError):
        TangleCertificate.from_json(data)


def test_obstruction_tangle_members() -> None:
    g = grid(2)
    cert = obstruction_tangle(g, [0b0111], [(0, 1, 3)])
    assert cert.order == 3
    assert cert.sets is not None
    assert 0b1011 in cert.sets
    assert 0b0111 in cert.sets
    assert 0b1111 not in cert.sets
