"""Constant-weight LP codes from t-intersecting families.

Two weight-``w`` words are within distance ``delta`` exactly when their
supports share at least ``w - delta/2`` points, so a constant-weight code of
diameter ``delta`` is a ``w``-uniform ``(w - delta/2)``-intersecting family.
The largest such families are the Frankl families ``F(i)`` below.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from lpbus.combinatorics import binomial
from lpbus.errors import InvalidArgumentError
from lpbus.hamming import Code, SetSystem, block_mask, from_set_system, words_of_weight
from lpbus.lp_codes import LpCodeFamily, LpParams


@dataclass(frozen=True)
class IntersectParams:
    n: int
    w: int
    t: int

    def __post_init__(self) -> None:
        if not 1 <= self.t <= self.w <= self.n:
            raise InvalidArgumentError(
                f"need 1 <= t <= w <= n, got n={self.n}, w={self.w}, t={self.t}"
            )

    @property
    def max_index(self) -> int:
        return (self.n - self.t) // 2


@dataclass(frozen=True)
class FrequencyFamily:
    params: IntersectParams
    index: int
    blocks: SetSystem


def _check_index(p: IntersectParams, i: int) -> None:
    if not 0 <= i <= p.max_index:
        raise InvalidArgumentError(f"index {i} outside [0, {p.max_index}]")


def frankl_family(p: IntersectParams, i: int) -> FrequencyFamily:
    """All ``w``-subsets ``F`` of ``[n]`` with ``|F & [t+2i]| >= t+i``."""
    _check_index(p, i)
    core = (1 << (p.t + 2 * i)) - 1
    blocks = [c for c in combinations(range(1, p.n + 1), p.w)
              if (block_mask(c) & core).bit_count() >= p.t + i]
    return FrequencyFamily(p, i, SetSystem(p.n, blocks))


def frankl_size(p: IntersectParams, i: int) -> int:
    """|F(i)|, counted by how many points of ``[t+2i]`` a block takes."""
    _check_index(p, i)
    core = p.t + 2 * i
    return sum(
        binomial(core, j) * binomial(p.n - core, p.w - j)
        for j in range(p.t + i, min(p.w, core) + 1)
    )


def max_intersecting_index(p: IntersectParams) -> int:
    """Smallest ``i`` maximizing ``|F(i)|``."""
    sizes = [frankl_size(p, i) for i in range(p.max_index + 1)]
    return sizes.index(max(sizes))


def max_intersecting(p: IntersectParams) -> tuple[int, FrequencyFamily]:
    """Maximum ``w``-uniform ``t``-intersecting family; ties go to the smallest index."""
    r = max_intersecting_index(p)
    return r, frankl_family(p, r)


def _threshold(w: int, delta: int) -> int:
    if delta < 0:
        raise InvalidArgumentError(f"delta must be non-negative, got {delta}")
    if delta % 2:
        raise InvalidArgumentError(
            f"delta={delta} is odd; distances between equal-weight words are always even"
        )
    return w - delta // 2


def cw_stateless_code(n: int, w: int, delta: int) -> Code:
    """Largest weight-``w`` code of length ``n`` with diameter at most ``delta``."""
    if not 0 <= w <= n:
        raise InvalidArgumentError(f"weight {w} outside [0, {n}]")
    t = _threshold(w, delta)
    if t <= 0:
        return Code.from_masks(n, words_of_weight(n, w))
    _, family = max_intersecting(IntersectParams(n, w, t))
    return from_set_system(family.blocks)


def cw_stateful_threshold_check(n: int, w: int, t: int) -> bool:
    """Whether ``n`` is large enough for the star to be a provably optimal two-state code.

    For each overlap ``u < t`` the count ``C(w-u, t-u)^2 C(n-2t+u, w-2t+u)`` of
    blocks compatible with two fixed blocks meeting in ``u`` points must fall
    below the star size ``C(n-t, w-t)``.
    """
    p = IntersectParams(n, w, t)
    star = binomial(p.n - p.t, p.w - p.t)
    for u in range(t):
        rest = n - (2 * t - u)
        compatible = binomial(w - u, t - u) ** 2 * (binomial(rest, w - (2 * t - u)) if rest >= 0 else 0)
        if compatible >= star:
            return False
    return True


def cw_stateful_code(n: int, w: int, delta: int, core: tuple[int, ...] | None = None) -> LpCodeFamily:
    """Two-state constant-weight LP code: both states use the star over ``core``.

    ``core`` is a ``t``-subset of ``[n]`` with ``t = w - delta/2`` and defaults
    to ``{1, ..., t}``.  The result is always a valid LP code; ``certified``
    records whether :func:`cw_stateful_threshold_check` establishes optimality.
    """
    if not 0 <= w <= n:
        raise InvalidArgumentError(f"weight {w} outside [0, {n}]")
    t = _threshold(w, delta)
    if t < 1:
        raise InvalidArgumentError(f"w - delta/2 = {t}; the star construction needs t >= 1")
    if core is None:
        core = tuple(range(1, t + 1))
    if len(set(core)) != t or any(not 1 <= p <= n for p in core):
        raise InvalidArgumentError(f"core must be {t} distinct points of [1, {n}], got {core}")
    pinned = block_mask(core)
    others = [p for p in range(1, n + 1) if p not in core]
    star = Code.from_masks(n, (block_mask(c) | pinned for c in combinations(others, w - t)))
    certified = cw_stateful_threshold_check(n, w, t)
    return LpCodeFamily(LpParams(n, min(delta, n), 2), (star, star), certified)
