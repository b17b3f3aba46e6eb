"""Projector families for distance-k colorings and their pinching checks.

A quantum distance-k coloring assigns each (vertex, color) pair a complex
orthogonal projector such that the projectors of one vertex resolve the
identity and projectors of a shared color annihilate each other across
any pair of distinct vertices at distance <= k.  Classical colorings
embed as the one-dimensional 0/1 case.

The block-diagonal color projectors P_s built from a coloring define the
pinching map X -> sum_s P_s X P_s.  For a valid coloring the pinching
kills the off-diagonal walk matrices of length <= k (the diagonal part of
a matrix power is always preserved, pinching fixes diagonal blocks) and
equals the phase average (1/c) sum_l U^l X U^-l for the root-of-unity
combination U = sum_s w^s P_s.  These identities are checked numerically;
nothing here is symbolic.
"""

from __future__ import annotations

import cmath
import json
from dataclasses import dataclass

import numpy as np

from .errors import GraphFormatError, StructureError, VerificationError
from .graphs import Graph, distances
from .spectral import Poly, Spectrum, eval_poly_scalar

DEFAULT_QTOL = 1e-10


@dataclass(frozen=True)
class QuantumColoring:
    """Projectors indexed [vertex, color] as an (n, c, d, d) complex array."""

    projectors: np.ndarray

    def __post_init__(self) -> None:
        p = np.asarray(self.projectors, dtype=np.complex128)
        if p.ndim != 4 or p.shape[2] != p.shape[3]:
            raise StructureError("projectors must have shape (n, c, d, d)")
        if not np.isfinite(p.view(np.float64)).all():
            raise StructureError("projector entries must be finite")
        p = p.copy()
        p.setflags(write=False)
        object.__setattr__(self, "projectors", p)

    @property
    def n(self) -> int:
        return self.projectors.shape[0]

    @property
    def c(self) -> int:
        return self.projectors.shape[1]

    @property
    def d(self) -> int:
        return self.projectors.shape[2]

    def to_json(self) -> str:
        entries = []
        for v in range(self.n):
            for h in range(self.c):
                mat = self.projectors[v, h]
                entries.append(
                    {
                        "v": v,
                        "h": h,
                        "matrix": [[[x.real, x.imag] for x in row] for row in mat],
                    }
                )
        return json.dumps(entries)

    @classmethod
    def from_json(cls, text: str) -> "QuantumColoring":
        try:
            entries = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphFormatError(f"projector JSON is invalid: {exc}") from None
        if not isinstance(entries, list) or not entries:
            raise GraphFormatError("projector JSON must be a non-empty array of {v, h, matrix}")
        triples = {}
        for item in entries:
            try:
                v, h, matrix = int(item["v"]), int(item["h"]), item["matrix"]
            except (KeyError, TypeError, ValueError):
                raise GraphFormatError("each entry needs integer v, h and a matrix") from None
            mat = np.array(
                [[complex(cell[0], cell[1]) for cell in row] for row in matrix],
                dtype=np.complex128,
            )
            triples[(v, h)] = mat
        n = max(v for v, _ in triples) + 1
        c = max(h for _, h in triples) + 1
        d = next(iter(triples.values())).shape[0]
        proj = np.zeros((n, c, d, d), dtype=np.complex128)
        for (v, h), mat in triples.items():
            if mat.shape != (d, d):
                raise GraphFormatError(f"projector ({v},{h}) has shape {mat.shape}, expected ({d},{d})")
            proj[v, h] = mat
        return cls(proj)


@dataclass(frozen=True)
class PinchingFamily:
    """Projectors P_1..P_c on an (n*d)-dimensional space resolving identity."""

    mats: np.ndarray
    n: int
    d: int
    block_diagonal: bool = True

    @property
    def c(self) -> int:
        return self.mats.shape[0]

    @property
    def dim(self) -> int:
        return self.mats.shape[1]


@dataclass
class Verdict:
    passed: bool
    max_residual: float
    violations: list[dict]

    def to_json_dict(self) -> dict:
        return {
            "pass": self.passed,
            "max_residual": self.max_residual,
            "violations": self.violations,
        }


def _adjoint(x: np.ndarray) -> np.ndarray:
    return x.conj().T


def _maxabs(x: np.ndarray) -> float:
    return float(np.abs(x).max()) if x.size else 0.0


def verify_quantum_coloring(qc: QuantumColoring, g: Graph, k: int, tol: float = DEFAULT_QTOL) -> Verdict:
    """Check projector validity, per-vertex completeness, and color
    orthogonality across all vertex pairs at distance 1..k.

    Violations are reported lexicographically as dicts with a kind tag,
    the offending indices, and the residual.
    """
    if qc.n != g.n:
        raise StructureError(f"coloring covers {qc.n} vertices, graph has {g.n}")
    d = qc.d
    eye = np.eye(d)
    violations: list[dict] = []
    worst = 0.0

    def record(kind: str, resid: float, **idx) -> None:
        nonlocal worst
        worst = max(worst, resid)
        if resid > tol:
            violations.append({"kind": kind, **idx, "residual": resid})

    for v in range(qc.n):
        total = np.zeros((d, d), dtype=np.complex128)
        for h in range(qc.c):
            p = qc.projectors[v, h]
            record("hermitian", _maxabs(p - _adjoint(p)), v=v, h=h)
            record("idempotent", _maxabs(p @ p - p), v=v, h=h)
            total += p
        record("completeness", _maxabs(total - eye), v=v)

    dm = distances(g).m
    for v in range(qc.n):
        for w in range(v + 1, qc.n):
            if 1 <= dm[v, w] <= k:
                for h in range(qc.c):
                    resid = _maxabs(qc.projectors[v, h] @ qc.projectors[w, h])
                    record("orthogonality", resid, v=v, w=w, h=h)

    return Verdict(passed=not violations, max_residual=worst, violations=violations)


def lift_classical(coloring, c: int) -> QuantumColoring:
    """Embed a classical coloring (vertex -> color in 0..c-1) with d = 1."""
    colors = list(coloring)
    if any(not 0 <= col < c for col in colors):
        raise StructureError(f"colors must lie in 0..{c - 1}")
    n = len(colors)
    proj = np.zeros((n, c, 1, 1), dtype=np.complex128)
    for v, col in enumerate(colors):
        proj[v, col, 0, 0] = 1.0
    return QuantumColoring(proj)


def build_pinching(qc: QuantumColoring, g: Graph, tol: float = DEFAULT_QTOL) -> PinchingFamily:
    """Assemble the block-diagonal color projectors P_s = sum_v E_vv x P_{v,s}.

    Requires the per-vertex projector and completeness checks to pass;
    asserts the assembled family resolves the identity.
    """
    if qc.n != g.n:
        raise StructureError(f"coloring covers {qc.n} vertices, graph has {g.n}")
    n, c, d = qc.n, qc.c, qc.d
    eye = np.eye(d)
    for v in range(n):
        total = np.zeros((d, d), dtype=np.complex128)
        for h in range(c):
            p = qc.projectors[v, h]
            if _maxabs(p - _adjoint(p)) > tol or _maxabs(p @ p - p) > tol:
                raise StructureError(f"projector ({v},{h}) is not an orthogonal projector")
            total += p
        if _maxabs(total - eye) > tol:
            raise StructureError(f"projectors of vertex {v} do not resolve the identity")
    mats = np.zeros((c, n * d, n * d), dtype=np.complex128)
    for s in range(c):
        for v in range(n):
            mats[s, v * d : (v + 1) * d, v * d : (v + 1) * d] = qc.projectors[v, s]
    resid = _maxabs(mats.sum(axis=0) - np.eye(n * d))
    if resid > tol:
        raise StructureError(f"assembled family does not resolve identity (residual {resid:.3e})")
    mats.setflags(write=False)
    return PinchingFamily(mats=mats, n=n, d=d, block_diagonal=True)


def pinch(family: PinchingFamily, x: np.ndarray) -> np.ndarray:
    """sum_s P_s X P_s."""
    x = np.asarray(x, dtype=np.complex128)
    if x.shape != (family.dim, family.dim):
        raise StructureError(f"matrix shape {x.shape} does not match pinching dimension {family.dim}")
    out = np.zeros_like(x)
    for s in range(family.c):
        p = family.mats[s]
        out += p @ x @ p
    return out


def offdiagonal_walk_matrix(g: Graph, ell: int) -> np.ndarray:
    """A^ell with its diagonal removed.

    This is the part of the walk matrix that a valid pinching kills: the
    diagonal of any power is made of closed walks, which pinching always
    fixes, so only the off-diagonal part can (and must) vanish.
    """
    a = g.adjacency_float()
    p = np.linalg.matrix_power(a, ell)
    np.fill_diagonal(p, 0.0)
    return p


def pinch_annihilation_residual(family: PinchingFamily, g: Graph, k: int) -> float:
    """Largest residual of pinch((A^ell)_offdiag x I) over ell = 1..k."""
    worst = 0.0
    eye = np.eye(family.d)
    for ell in range(1, k + 1):
        m = np.kron(offdiagonal_walk_matrix(g, ell), eye)
        worst = max(worst, _maxabs(pinch(family, m)))
    return worst


def pinch_diagonal_fix_residual(family: PinchingFamily) -> float:
    """Largest residual of pinch(E x I) - E x I over the diagonal basis."""
    n, d = family.n, family.d
    worst = 0.0
    eye = np.eye(d)
    for v in range(n):
        e = np.zeros((n, n))
        e[v, v] = 1.0
        m = np.kron(e, eye)
        worst = max(worst, _maxabs(pinch(family, m) - m))
    return worst


def pinching_to_coloring(family: PinchingFamily, g: Graph, k: int, tol: float = DEFAULT_QTOL) -> QuantumColoring:
    """Recover the per-vertex projectors from a pinching family.

    Verifies the structural preconditions first (block diagonality per
    vertex, identity resolution, annihilation of the off-diagonal walk
    matrices up to k, fixing of diagonal blocks), then extracts the
    blocks and re-verifies the resulting coloring.
    """
    n, d, c = family.n, family.d, family.c
    if family.dim != n * d or n != g.n:
        raise StructureError("pinching dimensions do not match the graph")
    block = np.zeros((n * d, n * d), dtype=bool)
    for v in range(n):
        block[v * d : (v + 1) * d, v * d : (v + 1) * d] = True
    for s in range(c):
        off = family.mats[s][~block]
        if _maxabs(off) > tol:
            raise StructureError(f"family member {s} is not block diagonal per vertex")
    resid = _maxabs(family.mats.sum(axis=0) - np.eye(n * d))
    if resid > tol:
        raise StructureError(f"family does not resolve the identity (residual {resid:.3e})")
    if pinch_annihilation_residual(family, g, k) > tol:
        raise VerificationError("pinching does not annihilate the off-diagonal walk matrices")
    if pinch_diagonal_fix_residual(family) > tol:
        raise VerificationError("pinching does not fix diagonal matrices")

    proj = np.zeros((n, c, d, d), dtype=np.complex128)
    for s in range(c):
        for v in range(n):
            proj[v, s] = family.mats[s][v * d : (v + 1) * d, v * d : (v + 1) * d]
    qc = QuantumColoring(proj)
    verdict = verify_quantum_coloring(qc, g, k, tol)
    if not verdict.passed:
        raise VerificationError(
            f"extracted blocks fail coloring verification (max residual {verdict.max_residual:.3e})"
        )
    return qc


def pinching_unitary_identity(family: PinchingFamily, x: np.ndarray, tol: float = DEFAULT_QTOL) -> float:
    """Residual of pinch(X) = (1/c) sum_{l=0}^{c-1} U^l X U^-l.

    U = sum_s w^(s+1) P_s with w the primitive c-th root of unity; its
    unitarity is checked to tol first.
    """
    x = np.asarray(x, dtype=np.complex128)
    c = family.c
    dim = family.dim
    omega = cmath.exp(2j * cmath.pi / c)
    u = np.zeros((dim, dim), dtype=np.complex128)
    for s in range(c):
        u += omega ** (s + 1) * family.mats[s]
    unit_resid = _maxabs(u @ _adjoint(u) - np.eye(dim))
    if unit_resid > tol:
        raise StructureError(f"phase combination is not unitary (residual {unit_resid:.3e})")
    avg = np.zeros_like(x)
    term = x.copy()
    for _ in range(c):
        avg += term
        term = u @ term @ _adjoint(u)
    avg /= c
    return _maxabs(pinch(family, x) - avg)


def psd_split(spectrum: Spectrum, p: Poly, d: int) -> tuple[np.ndarray, np.ndarray]:
    """Split p(A) x I_d into a difference B - C of PSD matrices.

    B collects the positive eigenvalues of p(A) (rank d * their count),
    C the negative ones; both are built from the adjacency eigenvectors.
    """
    n = spectrum.n
    eye = np.eye(d)
    b = np.zeros((n * d, n * d))
    c = np.zeros((n * d, n * d))
    for i in range(n):
        val = eval_poly_scalar(p, float(spectrum.full[i]))
        vec = spectrum.vectors[:, i : i + 1]
        outer = vec @ vec.T
        if val > 0:
            b += val * np.kron(outer, eye)
        elif val < 0:
            c += -val * np.kron(outer, eye)
    return b, c
