from itertools import combinations

import pytest

from lpbus.combinatorics import binomial
from lpbus.errors import ResourceLimitError
from lpbus.hamming import diameter
from lpbus.lp_codes import kleitman_size, quasi_sphere
from lpbus.oracle import (
    SearchBudget,
    exhaustive_delta_pair,
    max_clique,
    max_delta_pair,
    max_diameter_code,
    max_t_intersecting,
)


def brute_clique(adj):
    n = len(adj)
    for size in range(n, 0, -1):
        for c in combinations(range(n), size):
            if all(adj[a] >> b & 1 for a, b in combinations(c, 2)):
                return size
    return 0


def test_max_clique_against_subset_search():
    import random

    rng = random.Random(8)
    for _ in range(40):
        n = rng.randint(1, 11)
        adj = [0] * n
        for a, b in combinations(range(n), 2):
            if rng.random() < 0.5:
                adj[a] |= 1 << b
                adj[b] |= 1 << a
        clique, exact, _ = max_clique(adj)
        assert exact
        assert len(clique) == brute_clique(adj)
        assert all(adj[a] >> b & 1 for a, b in combinations(clique, 2))


def test_max_diameter_code_examples():
    assert max_diameter_code(4, 2).size == 5
    for n in range(5):
        assert max_diameter_code(n, n).size == 1 << n
    result = max_diameter_code(6, 5)
    assert result.size == 32 and result.exact and result.status == "exact"


def test_max_diameter_witness_is_valid():
    result = max_diameter_code(5, 3)
    assert len(result.witness) == result.size == kleitman_size(5, 3)
    assert diameter(result.witness) <= 3


def test_max_t_intersecting_examples():
    result = max_t_intersecting(6, 3, 1)
    assert result.size == 10
    blocks = result.witness.blocks
    assert all(len(a & b) >= 1 for a, b in combinations(blocks, 2))
    assert max_t_intersecting(5, 3, 3).size == 1
    assert max_t_intersecting(4, 2, 1).size == 3
    assert max_t_intersecting(7, 2, 1).size == binomial(6, 1)


def test_max_delta_pair_examples():
    assert max_delta_pair(4, 2).min_size == 5
    result = max_delta_pair(5, 3)
    assert result.min_size == 10 and result.exact
    first, second = result.first.masks, result.second.masks
    assert all((a ^ b).bit_count() <= 3 for a in first for b in second)


@pytest.mark.parametrize("n", range(0, 5))
def test_exhaustive_delta_pair_matches_closed_form(n):
    for delta in range(n + 1):
        result = exhaustive_delta_pair(n, delta)
        assert result.exact
        assert result.min_size == kleitman_size(n, delta)
        assert result.maximizers >= 1
        for system in result.non_quasi_sphere:
            assert system != quasi_sphere(n, len(system)).blocks


def test_budget_exceeded_is_reported():
    result = max_diameter_code(6, 4, SearchBudget(node_limit=5))
    assert not result.exact and result.status == "budget_exceeded"
    assert result.size <= kleitman_size(6, 4)
    assert diameter(result.witness) <= 4
    tiny = max_delta_pair(5, 3, SearchBudget(time_limit=0.0))
    assert not tiny.exact


def test_order_caps():
    with pytest.raises(ResourceLimitError):
        max_diameter_code(7, 3)
    with pytest.raises(ResourceLimitError):
        max_t_intersecting(9, 3, 1)
    with pytest.raises(ResourceLimitError):
        max_delta_pair(6, 3)
    with pytest.raises(ResourceLimitError):
        exhaustive_delta_pair(5, 3)
    assert max_diameter_code(3, 1, SearchBudget(max_order=3)).size == 2
    with pytest.raises(ResourceLimitError):
        max_diameter_code(4, 1, SearchBudget(max_order=3))


def test_searches_are_deterministic():
    a, b = max_diameter_code(5, 2), max_diameter_code(5, 2)
    assert a.witness == b.witness and a.nodes == b.nodes
    assert max_t_intersecting(7, 3, 2).witness == max_t_intersecting(7, 3, 2).witness
