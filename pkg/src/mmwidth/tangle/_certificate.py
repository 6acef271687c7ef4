from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import TYPE_CHECKING, Any, Literal

from mmwidth._exceptions import InvalidInputError, InvariantViolationError
from mmwidth.graph import from_bits, grid_index
from mmwidth.tangle._grid import is_small

if TYPE_CHECKING:
    from collections.abc import Iterable, Mapping

    from mmwidth.graph import Graph

__all__ = [
    "SmallSetOracle",
    "TangleCertificate",
    "grid_tangle",
    "obstruction_tangle",
    "tangle3_example",
]


@dataclass(frozen=True, slots=True)
class SmallSetOracle:
    """Membership test ``mm(X) < k`` and no full row, on the ``k x k`` grid."""

    k: int

    def __post_init__(self) -> None:
        if self.k < 2:
            raise InvalidInputError(f"grid side must be at least 2, got {self.k}")

    def __call__(self, x: int) -> bool:
        return is_small(self.k, x)


@dataclass(frozen=True, slots=True)
class TangleCertificate:
    """A candidate tangle: explicit member sets, or a membership oracle.

    Members are vertex bitmasks over ``ground_size`` vertices. The empty
    set is always a member and is never listed.

    Raises
    ------
    InvalidInputError
        If both or neither of `sets` and `oracle` are given, or a listed
        set is empty or not a proper subset of the ground set.
    """

    order: int
    ground_size: int
    sets: frozenset[int] | None = None
    oracle: SmallSetOracle | None = None

    def __post_init__(self) -> None:
        if self.order < 1:
            raise InvalidInputError(f"tangle order must be positive, got {self.order}")
        if (self.sets is None) == (self.oracle is None):
            raise InvalidInputError("a certificate needs exactly one of an explicit list or an oracle")
        if self.sets is not None:
            full = (1 << self.ground_size) - 1
            for s in self.sets:
                if s <= 0 or s & ~full or s == full:
                    raise InvalidInputError(f"listed set {s:#x} is not a proper nonempty subset")
        if self.oracle is not None and self.oracle.k**2 != self.ground_size:
            raise InvalidInputError("oracle grid does not match the ground size")

    @property
    def mode(self) -> Literal["explicit", "oracle"]:
        return "explicit" if self.sets is not None else "oracle"

    def _oracle(self) -> SmallSetOracle:
        if self.oracle is None:
            raise InvariantViolationError("certificate has neither explicit sets nor an oracle")
        return self.oracle

    def membership(self, x: int) -> bool:
        """Whether the vertex set ``x`` belongs to the collection."""
        if x == 0:
            return True
        if self.sets is not None:
            return x in self.sets
        return self._oracle()(x)

    def without(self, x: int) -> TangleCertificate:
        """Copy of an explicit certificate with ``x`` removed."""
        if self.sets is None:
            raise InvalidInputError("only explicit certificates can be edited")
        return TangleCertificate(self.order, self.ground_size, self.sets - {x})

    def to_json(self) -> dict[str, Any]:
        data: dict[str, Any] = {"order": self.order, "ground": self.ground_size, "mode": self.mode}
        if self.sets is not None:
            data["sets"] = [hex(s) for s in sorted(self.sets)]
        else:
            data["oracle"] = {"kind": "grid-small", "k": self._oracle().k}
        return data

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> TangleCertificate:
        try:
            order = int(data["order"])
            mode = data["mode"]
            if mode == "explicit":
                return cls(order, int(data["ground"]), frozenset(int(s, 16) for s in data["sets"]))
            if mode == "oracle":
                oracle = data["oracle"]
                if oracle["kind"] != "grid-small":
                    raise InvalidInputError(f"unknown oracle kind {oracle['kind']!r}")
                k = int(oracle["k"])
                return cls(order, int(data.get("ground", k * k)), oracle=SmallSetOracle(k))
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInputError(f"malformed tangle certificate: {exc}") from exc
        raise InvalidInputError(f"unknown certificate mode {mode!r}")


def _up_to_two(n: int) -> set[int]:
    full = (1 << n) - 1
    out = {1 << v for v in range(n)} | {1 << u | 1 << v for u, v in combinations(range(n), 2)}
    return {s for s in out if s != full}


_GRID3_TRIPLES = (
    ((1, 1), (1, 2), (2, 1)),
    ((1, 2), (1, 3), (2, 3)),
    ((2, 3), (3, 2), (3, 3)),
    ((2, 1), (3, 1), (3, 2)),
)


def tangle3_example() -> TangleCertificate:
    """Order-3 tangle of the 3x3 grid: every set of at most two vertices plus four corner triples."""
    triples = {from_bits(grid_index(i, j, 3) for i, j in t) for t in _GRID3_TRIPLES}
    return TangleCertificate(3, 9, frozenset(_up_to_two(9) | triples))


def grid_tangle(k: int) -> TangleCertificate:
    """Order-``k`` tangle of the ``k x k`` grid made of its small sets.

    Raises
    ------
    InvalidInputError
        If ``k < 2``.
    """
    return TangleCertificate(k, k * k, oracle=SmallSetOracle(k))


def obstruction_tangle(
    g: Graph, good_sides: Iterable[int], elevens: Iterable[Iterable[int]]
) -> TangleCertificate:
    """Order-3 candidate for an obstruction graph.

    Members are the sets of at most two vertices, the given good sides
    of 2-cuts and, for each pair of parallel two-edge paths ``a-u-b`` and
    ``a-v-b``, the triples ``{a, u, b}`` and ``{a, v, b}``. The result
    still has to be verified.
    """
    full = g.vertices
    sets = _up_to_two(g.n)
    sets.update(s for s in good_sides if s != full)
    sets.update(from_bits(t) for t in elevens)
    return TangleCertificate(3, g.n, frozenset(s for s in sets if s and s != full))
