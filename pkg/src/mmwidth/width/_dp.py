"""Exact and decision dynamic programs over rooted bipartitions.

``opt(S)`` is the smallest width of a rooted binary tree whose leaves are
``S``, counting the edge above the root with value ``f(S)``. Splits
``S = S1 | S2`` always put the lowest element of ``S`` into ``S1``.
At the top ``f(V)`` is taken as 0, which turns the two root edges into
the single edge of an unrooted tree.
"""

from __future__ import annotations

import logging
from array import array
from dataclasses import dataclass
from typing import TYPE_CHECKING

from mmwidth._exceptions import GroundSetTooLargeError, InvalidInputError, InvariantViolationError
from mmwidth.width._decomposition import (
    BranchDecomposition,
    TreeBuilder,
    enumerate_branch_decompositions,
)

if TYPE_CHECKING:
    from collections.abc import Mapping

    from mmwidth.cuts import CutFunction

__all__ = [
    "DP_HARD_MAX",
    "DP_MAX_GROUND",
    "FWidthResult",
    "fwidth_at_most",
    "fwidth_bruteforce",
    "fwidth_exact",
]

DP_MAX_GROUND = 16
DP_HARD_MAX = 20

_SYMMETRY_PROBES = 64

logger = logging.getLogger("mmwidth")


@dataclass(frozen=True, slots=True)
class FWidthResult:
    """Exact width together with a decomposition attaining it."""

    width: int
    witness: BranchDecomposition
    function: str
    """Name of the cut function, e.g. ``"mm"``."""


def _check_function(f: CutFunction) -> None:
    if f(0) != 0:
        raise InvariantViolationError(f"{f.name}: value of the empty set is {f(0)}, expected 0")
    n = f.ground_size
    if n < 2:
        return
    # deterministic probes spread over the mask space
    step = max(1, ((1 << n) - 1) // _SYMMETRY_PROBES)
    for mask in range(1, 1 << n, step):
        if not f.check_symmetric(mask):
            raise InvariantViolationError(f"{f.name} is not symmetric on mask {mask:#x}")


def _assemble(n: int, choice: Mapping[int, int] | array[int]) -> BranchDecomposition:
    """Turn recorded splits into an unrooted branch-decomposition."""
    if n == 0:
        return BranchDecomposition.empty()
    builder = TreeBuilder()
    for x in range(n):
        builder.leaf[x] = builder.new_node()

    def grow(mask: int) -> int:
        if mask & (mask - 1) == 0:
            return builder.leaf[mask.bit_length() - 1]
        left = choice[mask]
        a = grow(left)
        b = grow(mask ^ left)
        node = builder.new_node()
        builder.connect(node, a)
        builder.connect(node, b)
        return node

    full = (1 << n) - 1
    if n >= 2:
        left = choice[full]
        builder.connect(grow(left), grow(full ^ left))
    return builder.build()


def _limit(f: CutFunction, allow_override: bool, max_ground: int, hard_max: int) -> None:
    n = f.ground_size
    limit = hard_max if allow_override else max_ground
    if n > limit:
        raise GroundSetTooLargeError(f"exact {f.name}-width", n, limit)


def fwidth_exact(
    f: CutFunction,
    *,
    allow_override: bool = False,
    max_ground: int = DP_MAX_GROUND,
    hard_max: int = DP_HARD_MAX,
) -> FWidthResult:
    """Exact ``f``-width by dynamic programming over all subsets.

    Ties are broken toward the numerically smallest ``S1``, so the
    witness is a deterministic function of ``f``.

    Parameters
    ----------
    f : CutFunction
        Symmetric cut function with ``f(empty) == 0``.
    allow_override : bool
        Accept ground sets up to ``hard_max`` instead of ``max_ground``.
    max_ground : int
        Default ground-set cap.
    hard_max : int
        Cap with the override.

    Raises
    ------
    GroundSetTooLargeError
        If the ground set exceeds the applicable cap.
    InvariantViolationError
        If ``f`` is detected not to be symmetric, or the witness fails
        to attain the computed width.
    """
    _limit(f, allow_override, max_ground, hard_max)
    _check_function(f)
    n = f.ground_size
    if n <= 1:
        return FWidthResult(0, _assemble(n, {}), f.name)

    full = (1 << n) - 1
    opt = array("b", [0]) * (1 << n)
    choice = array("q", [0]) * (1 << n)
    for s in range(1, 1 << n):
        fs = 0 if s == full else f(s)
        if s & (s - 1) == 0:
            opt[s] = fs
            continue
        low = s & -s
        rest = s ^ low
        best = 127
        pick = 0
        t = 0
        while t != rest:
            s1 = low | t
            a = opt[s1]
            b = opt[s ^ s1]
            v = a if a > b else b
            if v < best:
                best = v
                pick = s1
                if best <= fs:
                    break
            t = (t - rest) & rest
        opt[s] = fs if fs > best else best
        choice[s] = pick

    width = opt[full]
    witness = _assemble(n, choice)
    achieved = witness.width_of(f)
    if achieved != width:
        raise InvariantViolationError(
            f"{f.name}: witness attains {achieved}, dynamic program says {width}"
        )
    logger.debug("%s-width %d over %d elements (%d cut evaluations)", f.name, width, n, f.evaluations)
    return FWidthResult(width, witness, f.name)


def fwidth_at_most(
    f: CutFunction,
    w: int,
    *,
    allow_override: bool = False,
    max_ground: int = DP_MAX_GROUND,
    hard_max: int = DP_HARD_MAX,
) -> BranchDecomposition | None:
    """Decide ``f-width <= w``, returning a witness when it holds.

    Top-down search over rooted bipartitions; only sets with ``f <= w``
    are ever expanded, and cut values are evaluated lazily, so a
    function capped at ``w + 1`` is enough.

    Raises
    ------
    InvalidInputError
        If ``w`` is negative.
    GroundSetTooLargeError
        If the ground set exceeds the applicable cap.
    """
    if w < 0:
        raise InvalidInputError(f"width bound must be non-negative, got {w}")
    _limit(f, allow_override, max_ground, hard_max)
    n = f.ground_size
    if n <= 1:
        return _assemble(n, {})
    full = (1 << n) - 1
    if any(f(1 << x) > w for x in range(n)):
        return None

    choice: dict[int, int] = {}
    failed: set[int] = set()

    def solvable(s: int) -> bool:
        if s & (s - 1) == 0 or s in choice:
            return True
        if s in failed:
            return False
        low = s & -s
        rest = s ^ low
        t = 0
        while t != rest:
            s1 = low | t
            s2 = s ^ s1
            if f(s1) <= w and f(s2) <= w and solvable(s1) and solvable(s2):
                choice[s] = s1
                return True
            t = (t - rest) & rest
        failed.add(s)
        return False

    if not solvable(full):
        return None
    witness = _assemble(n, choice)
    if witness.width_of(f) > w:
        raise InvariantViolationError(f"{f.name}: decision witness exceeds {w}")
    return witness


_BRUTEFORCE_MAX = 8


def fwidth_bruteforce(f: CutFunction) -> int:
    """Minimum width over every branch-decomposition of the ground set.

    Enumerates all ``(2n-5)!!`` trees; the independent check for the
    dynamic programs on tiny ground sets.
    """
    if f.ground_size > _BRUTEFORCE_MAX:
        raise GroundSetTooLargeError("brute-force width", f.ground_size, _BRUTEFORCE_MAX)
    return min(d.width_of(f) for d in enumerate_branch_decompositions(f.ground_size))
