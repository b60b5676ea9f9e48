"""Exact binomials and co-lexicographic ranking of fixed-weight words.

Colex order on ``w``-subsets of ``[n]`` compares the largest elements first.
A subset ``{t_1 < ... < t_w}`` has rank ``sum_j C(t_j - 1, j)``, which is the
combinatorial number system.  Python integers are unbounded, so counts never
overflow.
"""

from __future__ import annotations

from itertools import combinations, islice
from math import comb

from lpbus.errors import InvalidArgumentError
from lpbus.hamming import BitWord


def binomial(n: int, k: int) -> int:
    """C(n, k) for ``n >= 0``; zero when ``k < 0`` or ``k > n``."""
    if n < 0:
        raise InvalidArgumentError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def rank_points(points: tuple[int, ...]) -> int:
    """Colex rank of a subset given as ascending 1-based points."""
    return sum(comb(t - 1, j) for j, t in enumerate(points, start=1))


def unrank_points(n: int, w: int, r: int) -> tuple[int, ...]:
    """Ascending ``w``-subset of ``[n]`` with colex rank ``r``.

    Elements are recovered largest first: at step ``i`` the next element is
    ``x + 1`` for the largest ``x`` with ``C(x, w + 1 - i) <= r``.  The search
    for ``x`` is a bisection, so one call costs O(w log n) binomials.
    """
    if w < 0 or w > n:
        raise InvalidArgumentError(f"weight {w} outside [0, {n}]")
    total = comb(n, w)
    if not 0 <= r < total:
        raise InvalidArgumentError(f"rank {r} outside [0, {total - 1}]")
    points = []
    hi = n
    for j in range(w, 0, -1):
        # largest x in [j - 1, hi - 1] with C(x, j) <= r; C(j - 1, j) = 0 always qualifies
        lo, top = j - 1, hi - 1
        while lo < top:
            mid = (lo + top + 1) // 2
            if comb(mid, j) <= r:
                lo = mid
            else:
                top = mid - 1
        points.append(lo + 1)
        r -= comb(lo, j)
        hi = lo
    return tuple(reversed(points))


def colex_rank(w: int, word: BitWord) -> int:
    """Position of ``supp(word)`` among all ``w``-subsets of ``[n]`` in colex order."""
    if word.weight != w:
        raise InvalidArgumentError(f"word {word} has weight {word.weight}, expected {w}")
    return rank_points(word.support)


def colex_unrank(n: int, w: int, r: int) -> BitWord:
    """The weight-``w`` word of length ``n`` whose colex rank is ``r``."""
    return BitWord.from_support(n, unrank_points(n, w, r))


def lex_subsets_prefix(n: int, k: int, count: int) -> list[tuple[int, ...]]:
    """First ``count`` ``k``-subsets of ``[n]`` in lexicographic order.

    Subsets are ascending tuples compared element by element, e.g. for
    ``n=4, k=2``: (1, 2), (1, 3), (1, 4), (2, 3), ...
    """
    if n < 0 or k < 0 or k > n:
        raise InvalidArgumentError(f"no {k}-subsets of [{n}]")
    total = comb(n, k)
    if not 0 <= count <= total:
        raise InvalidArgumentError(f"prefix length {count} outside [0, {total}]")
    return list(islice(combinations(range(1, n + 1), k), count))
