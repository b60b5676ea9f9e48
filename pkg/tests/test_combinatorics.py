from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from lpbus.combinatorics import (
    binomial,
    colex_rank,
    colex_unrank,
    lex_subsets_prefix,
    rank_points,
    unrank_points,
)
from lpbus.errors import InvalidArgumentError
from lpbus.hamming import BitWord


def pascal(rows):
    table = [[1]]
    for n in range(1, rows + 1):
        prev = table[-1]
        table.append([1] + [prev[k - 1] + prev[k] for k in range(1, n)] + [1])
    return table


def colex_enumeration(n, w):
    """All w-subsets sorted by their elements read largest first."""
    return sorted(combinations(range(1, n + 1), w), key=lambda c: tuple(reversed(c)))


def test_binomial_examples():
    assert binomial(6, 2) == 15
    assert binomial(8, 2) == pascal(8)[8][2] == 28
    for n in range(10):
        assert binomial(n, 0) == 1


def test_binomial_outside_range_is_zero():
    assert binomial(5, -1) == 0
    assert binomial(5, 6) == 0
    with pytest.raises(InvalidArgumentError):
        binomial(-1, 0)


def test_binomial_matches_pascal_triangle():
    table = pascal(64)
    for n in range(65):
        for k in range(n + 1):
            assert binomial(n, k) == table[n][k]
    # exact well beyond 128 bits
    assert binomial(200, 100) == pascal(200)[200][100]
    assert binomial(200, 100) > 1 << 128


@given(st.integers(1, 64), st.integers(-2, 66))
def test_binomial_pascal_identity(n, k):
    assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


def test_colex_rank_examples():
    assert colex_rank(3, BitWord.from_support(6, {1, 2, 3})) == 0
    order = colex_enumeration(6, 2)
    assert order.index((1, 3)) == 1
    assert order.index((2, 3)) == 2
    assert colex_rank(2, BitWord.from_support(6, {1, 3})) == 1
    assert colex_rank(2, BitWord.from_support(6, {2, 3})) == 2


def test_colex_rank_weight_mismatch():
    with pytest.raises(InvalidArgumentError):
        colex_rank(2, BitWord.from_string("111000"))


def test_colex_unrank_examples():
    assert colex_unrank(6, 3, 0) == BitWord.from_support(6, {1, 2, 3})
    assert colex_enumeration(8, 2)[13] == (4, 6)
    assert colex_unrank(8, 2, 13) == BitWord.from_support(8, {4, 6})


def test_colex_unrank_out_of_range():
    with pytest.raises(InvalidArgumentError):
        colex_unrank(6, 2, 15)
    with pytest.raises(InvalidArgumentError):
        colex_unrank(6, 2, -1)
    with pytest.raises(InvalidArgumentError):
        colex_unrank(4, 5, 0)


@pytest.mark.parametrize("n", range(0, 13))
def test_rank_unrank_exhaustive(n):
    for w in range(n + 1):
        order = colex_enumeration(n, w)
        assert len(order) == binomial(n, w)
        for r, subset in enumerate(order):
            assert unrank_points(n, w, r) == subset
            assert rank_points(subset) == r
            assert colex_rank(w, colex_unrank(n, w, r)) == r


@given(st.integers(1, 300), st.data())
def test_rank_unrank_large_orders(n, data):
    w = data.draw(st.integers(0, min(n, 8)))
    r = data.draw(st.integers(0, binomial(n, w) - 1))
    assert rank_points(unrank_points(n, w, r)) == r


@given(st.integers(2, 40), st.data())
def test_colex_order_compares_largest_differing_element(n, data):
    w = data.draw(st.integers(1, n - 1))
    total = binomial(n, w)
    a, b = sorted(data.draw(st.lists(st.integers(0, total - 1), min_size=2, max_size=2, unique=True)))
    sa, sb = set(unrank_points(n, w, a)), set(unrank_points(n, w, b))
    assert max(sa ^ sb) in sb


def test_lex_subsets_prefix():
    assert lex_subsets_prefix(4, 2, 3) == [(1, 2), (1, 3), (1, 4)]
    assert lex_subsets_prefix(5, 3, 0) == []
    assert lex_subsets_prefix(4, 2, 6) == sorted(combinations(range(1, 5), 2))
    with pytest.raises(InvalidArgumentError):
        lex_subsets_prefix(4, 2, 7)
