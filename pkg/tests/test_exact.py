"""Exact chromatic/independence solvers against brute-force oracles."""

from __future__ import annotations

import numpy as np

from spectrachrome import (
    chromatic_number_exact,
    generate,
    independence_number_exact,
    power_graph,
)
from spectrachrome.exact import is_independent_set, is_proper_coloring

from .conftest import (
    atlas_connected,
    brute_force_chromatic,
    brute_force_independence,
    make_graph,
    random_graph,
)


def test_c6_bipartite(c6):
    res = chromatic_number_exact(c6)
    assert res.chi == 2
    assert not res.timed_out
    assert is_proper_coloring(c6, res.coloring)


def test_c6_squared(c6):
    res = chromatic_number_exact(power_graph(c6, 2))
    assert res.chi == 3


def test_petersen_squared_is_k10(petersen):
    res = chromatic_number_exact(power_graph(petersen, 2))
    assert res.chi == 10


def test_independence_examples(c6):
    assert independence_number_exact(power_graph(c6, 2)).alpha == 2
    assert independence_number_exact(generate("complete", (7,))).alpha == 1
    assert independence_number_exact(make_graph(7, [])).alpha == 7


def test_witnesses_are_valid():
    rng = np.random.default_rng(23)
    for _ in range(25):
        g = random_graph(rng, int(rng.integers(2, 11)), 0.4)
        col = chromatic_number_exact(g)
        assert is_proper_coloring(g, col.coloring)
        assert len(set(col.coloring.values())) == col.chi
        ind = independence_number_exact(g)
        assert is_independent_set(g, ind.witness_set)
        assert len(ind.witness_set) == ind.alpha


def test_chromatic_matches_brute_force_small():
    for g in atlas_connected(5):
        assert chromatic_number_exact(g).chi == brute_force_chromatic(g)
    rng = np.random.default_rng(31)
    for _ in range(12):
        g = random_graph(rng, int(rng.integers(6, 8)), 0.5)
        assert chromatic_number_exact(g).chi == brute_force_chromatic(g)


def test_independence_matches_brute_force_small():
    rng = np.random.default_rng(37)
    for _ in range(25):
        g = random_graph(rng, int(rng.integers(1, 9)), 0.4)
        assert independence_number_exact(g).alpha == brute_force_independence(g)


def test_quotient_bound_small_sweep():
    """n / alpha_k <= chi_k across the small connected graphs."""
    for g in atlas_connected(6):
        for k in (1, 2, 3):
            p = power_graph(g, k)
            chi = chromatic_number_exact(p).chi
            alpha = independence_number_exact(p).alpha
            assert g.n <= chi * alpha
    rng = np.random.default_rng(41)
    for _ in range(10):
        g = random_graph(rng, 8, 0.35)
        for k in (1, 2, 3):
            p = power_graph(g, k)
            assert g.n <= chromatic_number_exact(p).chi * independence_number_exact(p).alpha


def test_budget_exhaustion_is_reported():
    g = random_graph(np.random.default_rng(5), 24, 0.5)
    res = chromatic_number_exact(g, budget=5)
    assert res.timed_out
    assert res.nodes_explored >= 5
    assert is_proper_coloring(g, res.coloring)  # greedy fallback is still proper
    res2 = independence_number_exact(g, budget=2)
    assert res2.timed_out
    assert is_independent_set(g, res2.witness_set)


def test_node_counts_are_deterministic():
    g = random_graph(np.random.default_rng(8), 12, 0.5)
    a = chromatic_number_exact(g)
    b = chromatic_number_exact(g)
    assert a.nodes_explored == b.nodes_explored
    assert a.chi == b.chi
