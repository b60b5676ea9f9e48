"""Brute-force optimality oracles for small instances.

Each search recomputes an extremal quantity from scratch, without using the
closed forms it is meant to check: maximum anticodes and maximum
t-intersecting families by exact maximum-clique search, maximum delta-pairs
by a quasi-sphere sweep (and, for ``n <= 4``, by enumerating every family).

A search that runs out of budget returns ``exact=False`` together with the
best size found so far, which is then only a lower bound.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Union

from lpbus.errors import InvalidArgumentError, ResourceLimitError
from lpbus.hamming import Code, SetSystem, block_mask
from lpbus.lp_codes import best_response, normalize_delta, quasi_sphere

DEFAULT_TIME_LIMIT = 60.0
DEFAULT_NODE_LIMIT = 10_000_000

DIAMETER_MAX_ORDER = 6
INTERSECTING_MAX_ORDER = 8
DELTA_PAIR_MAX_ORDER = 5
EXHAUSTIVE_PAIR_MAX_ORDER = 4


@dataclass(frozen=True)
class SearchBudget:
    """Limits for one oracle call; ``max_order=None`` uses the per-search default."""

    max_order: int | None = None
    time_limit: float = DEFAULT_TIME_LIMIT
    node_limit: int = DEFAULT_NODE_LIMIT

    def order_cap(self, default: int) -> int:
        return default if self.max_order is None else self.max_order


@dataclass(frozen=True)
class OracleResult:
    size: int
    witness: Union[Code, SetSystem]
    exact: bool
    nodes: int = 0

    @property
    def status(self) -> str:
        return "exact" if self.exact else "budget_exceeded"


@dataclass(frozen=True)
class DeltaPairResult:
    min_size: int
    first: SetSystem
    second: SetSystem
    exact: bool
    # only filled by the exhaustive search
    maximizers: int = 0
    non_quasi_sphere: list[SetSystem] = field(default_factory=list)

    @property
    def status(self) -> str:
        return "exact" if self.exact else "budget_exceeded"


class _OutOfBudget(Exception):
    pass


class _Clock:
    def __init__(self, budget: SearchBudget):
        self.budget = budget
        self.deadline = time.monotonic() + budget.time_limit
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget.node_limit:
            raise _OutOfBudget
        if not self.nodes & 0xFF and time.monotonic() > self.deadline:
            raise _OutOfBudget

    def expired(self) -> bool:
        return time.monotonic() > self.deadline


def _smallest_last_order(adj: list[int]) -> list[int]:
    """Degeneracy ordering, densest core first."""
    n = len(adj)
    degree = [a.bit_count() for a in adj]
    remaining = (1 << n) - 1
    removed = []
    while remaining:
        v = min((u for u in range(n) if remaining >> u & 1), key=degree.__getitem__)
        removed.append(v)
        remaining &= ~(1 << v)
        nbrs = adj[v] & remaining
        while nbrs:
            low = nbrs & -nbrs
            degree[low.bit_length() - 1] -= 1
            nbrs ^= low
    return removed[::-1]


def max_clique(adj: list[int], budget: SearchBudget | None = None) -> tuple[list[int], bool, int]:
    """Maximum clique of a graph given as bitset adjacency rows.

    Branch and bound over vertices in degeneracy order; each node greedily
    colours the candidate set and prunes once ``|R| + colours`` cannot beat
    the incumbent.  Returns ``(clique, exact, nodes)``.
    """
    budget = budget or SearchBudget()
    n = len(adj)
    if n == 0:
        return [], True, 0
    order = _smallest_last_order(adj)
    position = {v: i for i, v in enumerate(order)}
    local = [0] * n
    for v in range(n):
        row, nbrs = 0, adj[v]
        while nbrs:
            low = nbrs & -nbrs
            row |= 1 << position[low.bit_length() - 1]
            nbrs ^= low
        local[position[v]] = row

    clock = _Clock(budget)
    # greedy incumbent so a budget stop still returns a valid clique
    best: list[int] = []
    cands = (1 << n) - 1
    while cands:
        low = cands & -cands
        v = low.bit_length() - 1
        best.append(v)
        cands &= local[v]

    def coloured(cands: int) -> list[tuple[int, int]]:
        out = []
        colour = 0
        uncoloured = cands
        while uncoloured:
            colour += 1
            available = uncoloured
            while available:
                low = available & -available
                v = low.bit_length() - 1
                uncoloured &= ~low
                available &= ~low & ~local[v]
                out.append((v, colour))
        return out

    def expand(clique: list[int], cands: int) -> None:
        nonlocal best
        clock.tick()
        for v, colour in reversed(coloured(cands)):
            if len(clique) + colour <= len(best):
                return
            clique.append(v)
            sub = cands & local[v]
            if sub:
                expand(clique, sub)
            elif len(clique) > len(best):
                best = clique[:]
            clique.pop()
            cands &= ~(1 << v)

    try:
        expand([], (1 << n) - 1)
        exact = True
    except _OutOfBudget:
        exact = False
    return sorted(order[i] for i in best), exact, clock.nodes


def _check_order(n: int, budget: SearchBudget, default: int) -> None:
    cap = budget.order_cap(default)
    if n > cap:
        raise ResourceLimitError(f"n={n} exceeds the oracle bound {cap}")
    if n < 0:
        raise InvalidArgumentError(f"n must be non-negative, got {n}")


def max_diameter_code(n: int, delta: int, budget: SearchBudget | None = None) -> OracleResult:
    """Largest code in H(n) of diameter at most ``delta``, by clique search.

    Vertices are all 2^n words; edges join words at distance <= ``delta``.
    """
    budget = budget or SearchBudget()
    _check_order(n, budget, DIAMETER_MAX_ORDER)
    if delta < 0:
        raise InvalidArgumentError(f"delta must be non-negative, got {delta}")
    size = 1 << n
    adj = [
        sum(1 << v for v in range(size) if v != u and (u ^ v).bit_count() <= delta)
        for u in range(size)
    ]
    clique, exact, nodes = max_clique(adj, budget)
    return OracleResult(len(clique), Code.from_masks(n, clique), exact, nodes)


def max_t_intersecting(n: int, w: int, t: int, budget: SearchBudget | None = None) -> OracleResult:
    """Largest ``w``-uniform ``t``-intersecting family on ``[n]``, by clique search."""
    budget = budget or SearchBudget()
    _check_order(n, budget, INTERSECTING_MAX_ORDER)
    if not 1 <= t <= w <= n:
        raise InvalidArgumentError(f"need 1 <= t <= w <= n, got n={n}, w={w}, t={t}")
    blocks = [block_mask(c) for c in combinations(range(1, n + 1), w)]
    adj = [
        sum(1 << j for j, b in enumerate(blocks) if j != i and (a & b).bit_count() >= t)
        for i, a in enumerate(blocks)
    ]
    clique, exact, nodes = max_clique(adj, budget)
    return OracleResult(len(clique), SetSystem.from_masks(n, [blocks[i] for i in clique]), exact, nodes)


def max_delta_pair(n: int, delta: int, budget: SearchBudget | None = None) -> DeltaPairResult:
    """Best ``min(|A|, |B|)`` over delta-pairs, sweeping quasi-spheres ``A``.

    For each size ``N`` the quasi-sphere of that size is paired with its best
    response.  Ties keep the smallest ``N``.
    """
    budget = budget or SearchBudget()
    _check_order(n, budget, DELTA_PAIR_MAX_ORDER)
    delta = normalize_delta(n, delta)
    clock = _Clock(budget)
    best = None
    for size in range(1, (1 << n) + 1):
        if clock.expired():
            break
        first = quasi_sphere(n, size).blocks
        second = best_response(first, delta)
        value = min(size, len(second))
        if best is None or value > best[0]:
            best = (value, first, second)
    else:
        return DeltaPairResult(*best, exact=True)
    if best is None:
        empty = SetSystem(n)
        return DeltaPairResult(0, empty, empty, exact=False)
    return DeltaPairResult(*best, exact=False)


def exhaustive_delta_pair(n: int, delta: int, budget: SearchBudget | None = None) -> DeltaPairResult:
    """Best ``min(|A|, |B|)`` over every family ``A`` of subsets of ``[n]``.

    Makes no structural assumption: all 2^(2^n) families are enumerated, each
    paired with the largest compatible ``B``.  Maximizing families that are
    not the quasi-sphere of their size are collected (up to 16) as data.
    """
    budget = budget or SearchBudget()
    _check_order(n, budget, EXHAUSTIVE_PAIR_MAX_ORDER)
    delta = normalize_delta(n, delta)
    words = 1 << n
    everything = (1 << words) - 1
    ball = [sum(1 << v for v in range(words) if (u ^ v).bit_count() <= delta) for u in range(words)]
    clock = _Clock(budget)

    partner = [everything] * (1 << words)
    best_value, best_family, maximizers = -1, 0, []
    exact = True
    for family in range(1, 1 << words):
        if not family & 0x3FF and clock.expired():
            exact = False
            break
        low = family & -family
        partner[family] = partner[family ^ low] & ball[low.bit_length() - 1]
        value = min(family.bit_count(), partner[family].bit_count())
        if value > best_value:
            best_value, best_family, maximizers = value, family, [family]
        elif value == best_value:
            maximizers.append(family)

    def as_system(family: int) -> SetSystem:
        return SetSystem.from_masks(n, [v for v in range(words) if family >> v & 1])

    odd_ones = []
    for family in maximizers:
        system = as_system(family)
        if system != quasi_sphere(n, len(system)).blocks:
            odd_ones.append(system)
            if len(odd_ones) == 16:
                break
    return DeltaPairResult(
        best_value,
        as_system(best_family),
        as_system(partner[best_family]),
        exact,
        maximizers=len(maximizers),
        non_quasi_sphere=odd_ones,
    )
