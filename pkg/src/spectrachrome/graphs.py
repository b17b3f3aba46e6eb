"""Graph representation, parsing, generators, distances and power graphs.

Graphs are undirected and simple, stored as a dense symmetric boolean
adjacency matrix with vertex ids 0..n-1.  All values are immutable after
construction and safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .errors import FamilyParamError, GraphFormatError, NumericalError

MAX_VERTICES = 512

#: Sentinel used in distance matrices for pairs in different components.
UNREACHABLE = -1

FAMILIES = (
    "cycle",
    "complete",
    "path",
    "hypercube",
    "prism",
    "generalized_petersen",
    "kneser",
)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    adj: np.ndarray
    name: str = ""

    def __post_init__(self) -> None:
        a = np.asarray(self.adj, dtype=bool)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise GraphFormatError("adjacency must be a square matrix")
        n = a.shape[0]
        if n < 1:
            raise GraphFormatError("graphs must have at least one vertex")
        if n > MAX_VERTICES:
            raise GraphFormatError(f"at most {MAX_VERTICES} vertices supported, got {n}")
        if not np.array_equal(a, a.T):
            raise GraphFormatError("adjacency must be symmetric")
        if a.diagonal().any():
            raise GraphFormatError("self-loops are not allowed")
        a = a.copy()
        a.setflags(write=False)
        object.__setattr__(self, "adj", a)

    @property
    def n(self) -> int:
        return self.adj.shape[0]

    def degrees(self) -> np.ndarray:
        return self.adj.sum(axis=1).astype(np.int64)

    def edge_count(self) -> int:
        return int(self.adj.sum()) // 2

    def edges(self) -> list[tuple[int, int]]:
        iu = np.triu_indices(self.n, k=1)
        mask = self.adj[iu]
        return list(zip(iu[0][mask].tolist(), iu[1][mask].tolist()))

    def adjacency_float(self) -> np.ndarray:
        return self.adj.astype(np.float64)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and np.array_equal(self.adj, other.adj)

    def __hash__(self) -> int:
        return hash((self.n, self.adj.tobytes()))

    def __repr__(self) -> str:
        label = self.name or "graph"
        return f"Graph({label}, n={self.n}, m={self.edge_count()})"


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs shortest path lengths; UNREACHABLE marks disconnected pairs."""

    m: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        a = np.asarray(self.m, dtype=np.int32)
        a.setflags(write=False)
        object.__setattr__(self, "m", a)

    @property
    def n(self) -> int:
        return self.m.shape[0]

    def dist(self, v: int, w: int) -> int:
        return int(self.m[v, w])

    def eccentricity(self) -> np.ndarray:
        return self.m.max(axis=1)

    def diameter(self) -> int:
        """Largest finite distance."""
        return int(self.m.max())


# ---------------------------------------------------------------------------
# graph6 interchange format


def _g6_decode_n(data: bytes) -> tuple[int, int]:
    """Decode the leading N(n) field, returning (n, bytes consumed)."""
    if not data:
        raise GraphFormatError("empty graph6 input")
    b0 = data[0]
    if b0 < 63 or b0 > 126:
        raise GraphFormatError(f"graph6 byte 0 out of range 63..126: {b0}")
    if b0 != 126:
        return b0 - 63, 1
    if len(data) < 4:
        raise GraphFormatError("graph6 input truncated inside the size field")
    n = 0
    for off in (1, 2, 3):
        b = data[off]
        if b < 63 or b > 126:
            raise GraphFormatError(f"graph6 byte {off} out of range 63..126: {b}")
        n = (n << 6) | (b - 63)
    return n, 4


def parse_graph6(text: str | bytes) -> Graph:
    """Decode a header-less graph6 string into a Graph.

    The format packs the upper triangle column by column, six bits per
    byte, each byte offset by 63.  Trailing whitespace is tolerated; any
    other deviation raises GraphFormatError naming the byte offset.
    """
    if isinstance(text, str):
        data = text.strip().encode("ascii", errors="surrogateescape")
    else:
        data = bytes(text).strip()
    n, pos = _g6_decode_n(data)
    if n == 0:
        raise GraphFormatError("graph6 encodes an empty vertex set; n >= 1 required")
    if n > MAX_VERTICES:
        raise GraphFormatError(f"graph6 encodes n={n}, above the {MAX_VERTICES} cap")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos < nbytes:
        raise GraphFormatError(
            f"graph6 bit stream truncated: expected {nbytes} data bytes, got {len(data) - pos}"
        )
    if len(data) - pos > nbytes:
        raise GraphFormatError(f"unexpected trailing byte at offset {pos + nbytes}")
    bits = np.zeros(nbytes * 6, dtype=bool)
    for idx in range(nbytes):
        b = data[pos + idx]
        if b < 63 or b > 126:
            raise GraphFormatError(f"graph6 byte {pos + idx} out of range 63..126: {b}")
        v = b - 63
        for j in range(6):
            bits[idx * 6 + j] = (v >> (5 - j)) & 1
    adj = np.zeros((n, n), dtype=bool)
    t = 0
    for col in range(1, n):
        for row in range(col):
            if bits[t]:
                adj[row, col] = adj[col, row] = True
            t += 1
    return Graph(adj)


def encode_graph6(g: Graph) -> str:
    """Inverse of parse_graph6 (header-less, zero padding bits)."""
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    else:
        head = chr(126) + "".join(chr(((n >> s) & 0x3F) + 63) for s in (12, 6, 0))
    bits = []
    for col in range(1, n):
        for row in range(col):
            bits.append(1 if g.adj[row, col] else 0)
    while len(bits) % 6:
        bits.append(0)
    body = "".join(
        chr(sum(b << (5 - j) for j, b in enumerate(bits[i : i + 6])) + 63)
        for i in range(0, len(bits), 6)
    )
    return head + body


def parse_edge_list(text: str) -> Graph:
    """Parse the `u v` per line edge format; `#` starts a comment."""
    edges = []
    maxv = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected `u v`, got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer vertex id in {raw!r}") from None
        if u < 0 or v < 0:
            raise GraphFormatError(f"line {lineno}: vertex ids must be nonnegative")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop {u}-{v} not allowed")
        edges.append((u, v))
        maxv = max(maxv, u, v)
    if maxv < 0:
        raise GraphFormatError("edge list contains no edges; cannot infer vertex count")
    n = maxv + 1
    adj = np.zeros((n, n), dtype=bool)
    for u, v in edges:
        adj[u, v] = adj[v, u] = True
    return Graph(adj)


# ---------------------------------------------------------------------------
# generators


def _from_edges(n: int, edges, name: str) -> Graph:
    adj = np.zeros((n, n), dtype=bool)
    for u, v in edges:
        adj[u, v] = adj[v, u] = True
    return Graph(adj, name=name)


def generate(family: str, params: list[int] | tuple[int, ...] = ()) -> Graph:
    """Build a named graph family member.

    Supported families: cycle(n), complete(n), path(n), hypercube(d),
    prism(n), generalized_petersen(n, k), kneser(n, s).
    """
    params = tuple(int(p) for p in params)

    def need(count: int) -> None:
        if len(params) != count:
            raise FamilyParamError(f"{family} expects {count} parameter(s), got {len(params)}")

    if family == "cycle":
        need(1)
        (n,) = params
        if n < 3:
            raise FamilyParamError("cycle needs n >= 3")
        return _from_edges(n, [(i, (i + 1) % n) for i in range(n)], f"C{n}")
    if family == "complete":
        need(1)
        (n,) = params
        if n < 1:
            raise FamilyParamError("complete needs n >= 1")
        return _from_edges(n, combinations(range(n), 2), f"K{n}")
    if family == "path":
        need(1)
        (n,) = params
        if n < 1:
            raise FamilyParamError("path needs n >= 1")
        return _from_edges(n, [(i, i + 1) for i in range(n - 1)], f"P{n}")
    if family == "hypercube":
        need(1)
        (d,) = params
        if d < 1 or 2**d > MAX_VERTICES:
            raise FamilyParamError("hypercube needs 1 <= d <= 9")
        n = 2**d
        edges = [(u, u ^ (1 << b)) for u in range(n) for b in range(d) if u < (u ^ (1 << b))]
        return _from_edges(n, edges, f"Q{d}")
    if family == "prism":
        need(1)
        (n,) = params
        if n < 3:
            raise FamilyParamError("prism needs n >= 3")
        g = generate("generalized_petersen", (n, 1))
        return Graph(g.adj, name=f"prism{n}")
    if family == "generalized_petersen":
        need(2)
        n, k = params
        if n < 3 or k < 1 or 2 * k >= n:
            raise FamilyParamError("generalized_petersen needs n >= 3 and 1 <= k < n/2")
        edges = []
        for i in range(n):
            edges.append((i, (i + 1) % n))
            edges.append((i, n + i))
            edges.append((n + i, n + (i + k) % n))
        return _from_edges(2 * n, edges, f"GP({n},{k})")
    if family == "kneser":
        need(2)
        n, s = params
        if s < 1 or n < 2 * s:
            raise FamilyParamError("kneser needs 1 <= s and n >= 2s")
        verts = list(combinations(range(n), s))
        if len(verts) > MAX_VERTICES:
            raise FamilyParamError(f"kneser({n},{s}) has {len(verts)} vertices, above the cap")
        sets = [frozenset(v) for v in verts]
        edges = [
            (i, j)
            for i in range(len(sets))
            for j in range(i + 1, len(sets))
            if not (sets[i] & sets[j])
        ]
        return _from_edges(len(verts), edges, f"K({n},{s})")
    raise FamilyParamError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")


# ---------------------------------------------------------------------------
# distances, powers, walk regularity


def distances(g: Graph) -> DistanceMatrix:
    """All-pairs shortest path lengths by simultaneous breadth-first search."""
    n = g.n
    a = g.adjacency_float()
    dist = np.full((n, n), UNREACHABLE, dtype=np.int32)
    np.fill_diagonal(dist, 0)
    reached = np.eye(n, dtype=bool)
    frontier = np.eye(n, dtype=bool)
    level = 0
    while frontier.any():
        level += 1
        nxt = (frontier.astype(np.float64) @ a) > 0.5
        nxt &= ~reached
        if not nxt.any():
            break
        dist[nxt] = level
        reached |= nxt
        frontier = nxt
    return DistanceMatrix(dist)


def power_graph(g: Graph, k: int) -> Graph:
    """Graph on the same vertices joining pairs at distance 1..k."""
    if k < 1:
        raise FamilyParamError("power_graph needs k >= 1")
    d = distances(g).m
    adj = (d >= 1) & (d <= k)
    name = f"{g.name}^{k}" if g.name else ""
    return Graph(adj, name=name)


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex lists of the connected components, each sorted, ordered by minimum vertex."""
    d = distances(g).m
    seen = np.zeros(g.n, dtype=bool)
    comps = []
    for v in range(g.n):
        if seen[v]:
            continue
        members = np.nonzero(d[v] >= 0)[0]
        seen[members] = True
        comps.append(members.tolist())
    return comps


def induced_subgraph(g: Graph, vertices: list[int]) -> Graph:
    idx = np.asarray(vertices, dtype=np.intp)
    adj = g.adj[np.ix_(idx, idx)]
    return Graph(adj, name=g.name)


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


def is_k_partially_walk_regular(g: Graph, k: int) -> bool:
    """True when every vertex has the same number of closed walks of each
    length up to k.

    Lengths 0 and 1 hold for every graph (unit diagonal, empty diagonal),
    so the answer is always True for k = 1; length 2 already forces the
    graph to be regular.
    """
    if k < 1:
        raise FamilyParamError("walk regularity needs k >= 1")
    n = g.n
    a = g.adj.astype(np.int64)
    maxdeg = int(g.degrees().max(initial=0))
    p = a
    for ell in range(2, k + 1):
        if maxdeg > 0 and maxdeg**ell > 2**62:
            raise NumericalError(f"closed-walk counts at length {ell} exceed 64-bit range")
        p = p @ a
        diag = np.diagonal(p)
        if not np.all(diag == diag[0]):
            return False
    return True
