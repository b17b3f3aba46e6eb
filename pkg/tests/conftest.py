"""Shared fixtures and independent oracles for the test suite."""

from __future__ import annotations

import itertools

import numpy as np
import pytest

from spectrachrome import Graph, generate


def make_graph(n: int, edges, name: str = "") -> Graph:
    adj = np.zeros((n, n), dtype=bool)
    for u, v in edges:
        adj[u, v] = adj[v, u] = True
    return Graph(adj, name=name)


def disjoint_union(*graphs: Graph) -> Graph:
    n = sum(g.n for g in graphs)
    adj = np.zeros((n, n), dtype=bool)
    off = 0
    for g in graphs:
        adj[off : off + g.n, off : off + g.n] = g.adj
        off += g.n
    return Graph(adj)


def random_graph(rng: np.random.Generator, n: int, p: float, ensure_edge: bool = False) -> Graph:
    while True:
        upper = rng.random((n, n)) < p
        adj = np.triu(upper, k=1)
        adj = adj | adj.T
        if not ensure_edge or adj.any() or n == 1:
            return Graph(adj)


def to_networkx(g: Graph):
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_networkx(h) -> Graph:
    import networkx as nx

    mapping = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return make_graph(h.number_of_nodes(), [(mapping[u], mapping[v]) for u, v in h.edges()])


_ATLAS_CACHE: dict[int, list[Graph]] = {}


def atlas_connected(max_n: int) -> list[Graph]:
    """All connected graphs with 1..max_n vertices, one per isomorphism class."""
    if max_n not in _ATLAS_CACHE:
        import networkx as nx
        from networkx.generators.atlas import graph_atlas_g

        out = []
        for h in graph_atlas_g():
            if 1 <= h.number_of_nodes() <= max_n and nx.is_connected(h):
                out.append(from_networkx(h))
        _ATLAS_CACHE[max_n] = out
    return _ATLAS_CACHE[max_n]


def brute_force_chromatic(g: Graph) -> int:
    """Exhaustive c-colorability scan; independent of the search solver."""
    edges = g.edges()
    if not edges:
        return 1 if g.n else 0
    for c in range(2, g.n + 1):
        for assignment in itertools.product(range(c), repeat=g.n - 1):
            coloring = (0,) + assignment
            if all(coloring[u] != coloring[v] for u, v in edges):
                return c
    return g.n


def brute_force_independence(g: Graph) -> int:
    best = 0
    for r in range(g.n, 0, -1):
        for subset in itertools.combinations(range(g.n), r):
            if all(not g.adj[u, v] for u, v in itertools.combinations(subset, 2)):
                return r
    return best


def floyd_warshall(g: Graph) -> np.ndarray:
    inf = float("inf")
    n = g.n
    d = np.full((n, n), inf)
    np.fill_diagonal(d, 0.0)
    for u, v in g.edges():
        d[u, v] = d[v, u] = 1.0
    for m in range(n):
        d = np.minimum(d, d[:, m : m + 1] + d[m : m + 1, :])
    out = np.where(np.isinf(d), -1, d).astype(int)
    return out


@pytest.fixture(scope="session")
def c6() -> Graph:
    return generate("cycle", (6,))


@pytest.fixture(scope="session")
def petersen() -> Graph:
    return generate("generalized_petersen", (5, 2))
