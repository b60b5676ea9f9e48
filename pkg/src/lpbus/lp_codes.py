"""Optimal stateless and stateful low-power (LP) codes.

An ``(n, delta)_s`` LP code is a cyclic family of ``s`` codes of length ``n``
in which consecutive codes have cross diameter at most ``delta``: a bus that
sends a word from code ``i`` at cycle ``t`` and one from code ``i + 1`` at
cycle ``t + 1`` never toggles more than ``delta`` wires.  The largest
achievable minimum code size is the same for ``s = 1`` and ``s = 2``, and is
attained by the Kleitman anticodes built here.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from lpbus.combinatorics import binomial, lex_subsets_prefix
from lpbus.errors import InvalidArgumentError, ResourceLimitError
from lpbus.hamming import (
    Code,
    SetSystem,
    block_mask,
    cross_diameter,
    farthest_distance_table,
    words_of_weight,
)

BEST_RESPONSE_MAX_ORDER = 20


def normalize_delta(n: int, delta: int) -> int:
    """Clamp ``delta > n`` to ``n`` (with a warning); reject negative values."""
    if n < 0:
        raise InvalidArgumentError(f"n must be non-negative, got {n}")
    if delta < 0:
        raise InvalidArgumentError(f"delta must be non-negative, got {delta}")
    if delta > n:
        warnings.warn(f"delta={delta} exceeds n={n}; using delta={n}", stacklevel=3)
        return n
    return delta


@dataclass(frozen=True)
class LpParams:
    n: int
    delta: int
    s: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "delta", normalize_delta(self.n, self.delta))
        if self.s < 1:
            raise InvalidArgumentError(f"number of states must be >= 1, got {self.s}")


@dataclass(frozen=True)
class LpCodeFamily:
    """Subcodes ``C_0 .. C_{s-1}`` used in rotation, one per bus state.

    ``certified`` is False when the construction is valid but its optimality
    has not been established for these parameters.
    """

    params: LpParams
    subcodes: tuple[Code, ...]
    certified: bool = True

    def __post_init__(self) -> None:
        if len(self.subcodes) != self.params.s:
            raise InvalidArgumentError(
                f"{len(self.subcodes)} subcodes given for s={self.params.s}"
            )
        for code in self.subcodes:
            if code.n != self.params.n:
                raise InvalidArgumentError(f"subcode width {code.n} != n={self.params.n}")

    @property
    def min_size(self) -> int:
        return min(len(c) for c in self.subcodes)

    def restrict(self, states: list[int]) -> "LpCodeFamily":
        """Family formed by the listed states, in the given cyclic order."""
        if not states:
            raise InvalidArgumentError("need at least one state")
        subcodes = tuple(self.subcodes[i % self.params.s] for i in states)
        params = LpParams(self.params.n, self.params.delta, len(states))
        return LpCodeFamily(params, subcodes, self.certified)


@dataclass(frozen=True)
class QuasiSphere:
    """All subsets of size <= ``radius`` plus the first ``top_count`` lex
    (``radius`` + 1)-subsets."""

    n: int
    radius: int
    top_count: int
    blocks: SetSystem


def kleitman_size(n: int, delta: int) -> int:
    """Maximum size of a code in H(n) with diameter at most ``delta``."""
    delta = normalize_delta(n, delta)
    if delta == n:
        return 1 << n
    half = delta // 2
    size = sum(binomial(n, i) for i in range(half + 1))
    if delta % 2:
        size += binomial(n - 1, half)
    return size


def kleitman_masks(n: int, delta: int, x: int = 1) -> list[int]:
    """Masks of :func:`kleitman_code`, in (weight, colex) order."""
    delta = normalize_delta(n, delta)
    if n and not 1 <= x <= n:
        raise InvalidArgumentError(f"fixed point x={x} outside [1, {n}]")
    if delta == n:
        return sorted(range(1 << n), key=lambda m: (m.bit_count(), m))
    half = delta // 2
    masks = []
    for w in range(half + 1):
        masks.extend(words_of_weight(n, w))
    if delta % 2:
        others = [p for p in range(1, n + 1) if p != x]
        pin = 1 << (x - 1)
        masks.extend(sorted(block_mask(c) | pin for c in combinations(others, half)))
    return masks


def kleitman_code(n: int, delta: int, x: int = 1) -> Code:
    """Largest code of length ``n`` and diameter at most ``delta``.

    Even ``delta``: every word of weight <= delta/2.  Odd ``delta``: every word
    of weight <= (delta-1)/2 plus the weight-(delta+1)/2 words that have a 1 at
    position ``x``.  ``delta >= n`` gives the whole space.
    """
    return Code.from_masks(n, kleitman_masks(n, delta, x))


def stateful_optimal(n: int, delta: int, x: int = 1) -> LpCodeFamily:
    """Optimal two-state LP code; both states use the Kleitman code."""
    code = kleitman_code(n, delta, x)
    return LpCodeFamily(LpParams(n, min(delta, n), 2), (code, code))


def quasi_sphere(n: int, size: int) -> QuasiSphere:
    """The unique quasi-sphere of dimension ``n`` with ``size`` blocks."""
    if n < 0 or not 0 <= size <= 1 << n:
        raise InvalidArgumentError(f"quasi-sphere size {size} outside [0, 2^{n}]")
    # radius = largest r with sum_{i<=r} C(n, i) <= size; -1 when size == 0
    radius, filled = -1, 0
    while radius < n and filled + binomial(n, radius + 1) <= size:
        radius += 1
        filled += binomial(n, radius)
    top = size - filled
    blocks = [c for w in range(radius + 1) for c in combinations(range(1, n + 1), w)]
    if top:
        blocks.extend(lex_subsets_prefix(n, radius + 1, top))
    return QuasiSphere(n, radius, top, SetSystem(n, blocks))


def best_response(system: SetSystem, delta: int) -> SetSystem:
    """All blocks ``B`` with ``|B ^ A| <= delta`` for every block ``A`` of ``system``.

    This is the largest partner forming a delta-pair with ``system``.  Every
    one of the 2^n candidate blocks is examined, hence the order bound.
    """
    n = system.n
    if n > BEST_RESPONSE_MAX_ORDER:
        raise ResourceLimitError(f"best_response scans 2^n blocks; n={n} exceeds {BEST_RESPONSE_MAX_ORDER}")
    if delta < 0:
        raise InvalidArgumentError(f"delta must be non-negative, got {delta}")
    if not len(system):
        return SetSystem.from_masks(n, range(1 << n))
    table = farthest_distance_table(n, system.masks)
    return SetSystem.from_masks(n, np.flatnonzero(table <= delta).tolist())


def is_lp_family(family: LpCodeFamily) -> bool:
    """True iff every cyclically consecutive pair of subcodes is within delta.

    Empty subcodes impose no constraint.
    """
    codes = family.subcodes
    for i, code in enumerate(codes):
        nxt = codes[(i + 1) % len(codes)]
        if len(code) and len(nxt) and cross_diameter(code, nxt) > family.params.delta:
            return False
    return True
