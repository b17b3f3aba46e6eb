"""Exact chromatic and independence numbers by branch and bound.

Both searches use bitmask adjacency over Python integers and a fixed
deterministic vertex order (degree descending, id tie-break) so node
counts are reproducible.  A node budget turns exhaustion into a truthful
timed-out result carrying the best bounds found.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph

DEFAULT_BUDGET = 10_000_000


@dataclass
class ColoringResult:
    chi: int
    coloring: dict[int, int]
    nodes_explored: int
    timed_out: bool


@dataclass
class IndependenceResult:
    alpha: int
    witness_set: frozenset[int]
    nodes_explored: int = 0
    timed_out: bool = False


def _bitmask_adjacency(g: Graph) -> list[int]:
    masks = []
    for v in range(g.n):
        row = 0
        for u in g.adj[v].nonzero()[0]:
            row |= 1 << int(u)
        masks.append(row)
    return masks


def _vertex_order(g: Graph) -> list[int]:
    deg = g.degrees()
    return sorted(range(g.n), key=lambda v: (-int(deg[v]), v))


def greedy_clique(g: Graph) -> list[int]:
    """Deterministic greedy clique, used as a chromatic lower bound."""
    masks = _bitmask_adjacency(g)
    clique: list[int] = []
    common = (1 << g.n) - 1
    for v in _vertex_order(g):
        if common >> v & 1 or not clique:
            clique.append(v)
            common = masks[v] if len(clique) == 1 else common & masks[v]
            if common == 0:
                break
    return clique


def _greedy_dsatur(n: int, masks: list[int], order: list[int]) -> list[int]:
    """DSATUR greedy coloring; returns the color list (0-based)."""
    colors = [-1] * n
    neighbor_colors = [0] * n  # bitmask of colors seen in the neighborhood
    pos = {v: i for i, v in enumerate(order)}
    uncolored = set(range(n))
    while uncolored:
        v = max(uncolored, key=lambda u: (bin(neighbor_colors[u]).count("1"), -pos[u]))
        used = neighbor_colors[v]
        c = 0
        while used >> c & 1:
            c += 1
        colors[v] = c
        uncolored.discard(v)
        m = masks[v]
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            neighbor_colors[u] |= 1 << c
    return colors


def chromatic_number_exact(g: Graph, budget: int = DEFAULT_BUDGET) -> ColoringResult:
    """Exact chromatic number via DSATUR-ordered backtracking.

    Branches on the uncolored vertex with the largest saturation, trying
    only colors up to one past the current maximum (color symmetry), and
    prunes against the best coloring found so far.  When the node budget
    runs out the best upper bound found is returned with timed_out=True.
    """
    n = g.n
    masks = _bitmask_adjacency(g)
    order = _vertex_order(g)
    pos = {v: i for i, v in enumerate(order)}

    greedy = _greedy_dsatur(n, masks, order)
    best_k = max(greedy) + 1
    best_colors = list(greedy)
    lower = max(1, len(greedy_clique(g)))

    colors = [-1] * n
    neighbor_colors = [0] * n
    nodes = 0
    out_of_budget = False

    def pick() -> int:
        best_v = -1
        key = (-1, 0)
        for v in range(n):
            if colors[v] < 0:
                cand = (bin(neighbor_colors[v]).count("1"), -pos[v])
                if cand > key:
                    key = cand
                    best_v = v
        return best_v

    def backtrack(colored: int, used: int) -> None:
        nonlocal best_k, best_colors, nodes, out_of_budget
        if out_of_budget or best_k <= lower:
            return
        if colored == n:
            best_k = used
            best_colors = list(colors)
            return
        if used >= best_k:
            return
        v = pick()
        limit = min(used + 1, best_k - 1)
        for c in range(limit):
            if neighbor_colors[v] >> c & 1:
                continue
            nodes += 1
            if nodes > budget:
                out_of_budget = True
                return
            colors[v] = c
            touched = []
            m = masks[v]
            while m:
                u = (m & -m).bit_length() - 1
                m &= m - 1
                if not neighbor_colors[u] >> c & 1:
                    neighbor_colors[u] |= 1 << c
                    touched.append(u)
            backtrack(colored + 1, max(used, c + 1))
            colors[v] = -1
            for u in touched:
                neighbor_colors[u] &= ~(1 << c)
            if out_of_budget:
                return

    backtrack(0, 0)
    coloring = {v: best_colors[v] for v in range(n)}
    return ColoringResult(chi=best_k, coloring=coloring, nodes_explored=nodes, timed_out=out_of_budget)


def independence_number_exact(g: Graph, budget: int = DEFAULT_BUDGET) -> IndependenceResult:
    """Maximum independent set size by branch and bound.

    Uses the candidate-count bound |current| + |candidates| and branches
    on the highest-degree candidate (include/exclude), seeded with a
    greedy solution.
    """
    n = g.n
    masks = _bitmask_adjacency(g)
    deg_order = _vertex_order(g)

    # greedy seed: repeatedly take the lowest-degree remaining vertex
    taken = 0
    avail = (1 << n) - 1
    for v in reversed(deg_order):
        if avail >> v & 1:
            taken |= 1 << v
            avail &= ~(masks[v] | 1 << v)
    best_mask = taken
    best_size = bin(taken).count("1")

    nodes = 0
    out_of_budget = False

    def expand(current: int, size: int, cand: int) -> None:
        nonlocal best_mask, best_size, nodes, out_of_budget
        if out_of_budget:
            return
        ncand = bin(cand).count("1")
        if size + ncand <= best_size:
            return
        if ncand == 0:
            best_size = size
            best_mask = current
            return
        pick = -1
        for v in deg_order:
            if cand >> v & 1:
                pick = v
                break
        nodes += 1
        if nodes > budget:
            out_of_budget = True
            return
        expand(current | 1 << pick, size + 1, cand & ~(masks[pick] | 1 << pick))
        expand(current, size, cand & ~(1 << pick))

    expand(0, 0, (1 << n) - 1)
    witness = frozenset(v for v in range(n) if best_mask >> v & 1)
    return IndependenceResult(
        alpha=best_size, witness_set=witness, nodes_explored=nodes, timed_out=out_of_budget
    )


def is_proper_coloring(g: Graph, coloring: dict[int, int]) -> bool:
    return all(coloring[u] != coloring[v] for u, v in g.edges())


def is_independent_set(g: Graph, vertices) -> bool:
    vs = list(vertices)
    return all(not g.adj[u, v] for i, u in enumerate(vs) for v in vs[i + 1 :])
