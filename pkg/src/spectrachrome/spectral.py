"""Adjacency spectra: eigendecomposition, inertia, and polynomial statistics.

The eigensolver is the cyclic Jacobi kernel; eigenvalues are reported in
descending order together with a grouping into distinct values and
multiplicities.  Degree-bounded polynomials evaluated at the adjacency
matrix supply the diagonal and spectral statistics that every bound in
this package optimizes over.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import NumericalError
from .graphs import Graph

#: Relative eigenvalue grouping tolerance (scaled by the spectral radius).
DEFAULT_EIG_TOL = 1e-8


@dataclass(frozen=True)
class Poly:
    """Real polynomial a_0 + a_1 x + ... + a_k x^k stored by coefficients."""

    coeffs: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(float(a) for a in self.coeffs))
        if not self.coeffs:
            raise ValueError("a polynomial needs at least one coefficient")

    @property
    def degree_bound(self) -> int:
        return len(self.coeffs) - 1

    @property
    def degree(self) -> int:
        """Actual degree, ignoring trailing zero coefficients (-1 for p = 0)."""
        for i in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[i] != 0.0:
                return i
        return -1

    def __call__(self, x: float) -> float:
        return eval_poly_scalar(self, x)


@dataclass(frozen=True)
class Inertia:
    n_plus: int
    n_zero: int
    n_minus: int

    @property
    def n(self) -> int:
        return self.n_plus + self.n_zero + self.n_minus


@dataclass(frozen=True)
class PolyStats:
    """Diagonal and spectral statistics of p at a graph.

    W and w are the largest and smallest diagonal entry of p(A); lambda_p
    is the minimum of p over eigenvalue positions 2..n of the sorted
    spectrum (math.inf when n = 1), and p_lambda1 the value at the top
    eigenvalue.
    """

    W: float
    w: float
    lambda_p: float
    p_lambda1: float


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues sorted descending plus the distinct/multiplicity grouping."""

    full: np.ndarray
    vectors: np.ndarray
    distinct: np.ndarray
    mult: tuple[int, ...]
    tol: float

    @property
    def n(self) -> int:
        return self.full.shape[0]

    @property
    def n_distinct(self) -> int:
        return self.distinct.shape[0]

    def to_json_dict(self) -> dict:
        return {
            "distinct": [float(f"{x:.15g}") for x in self.distinct],
            "mult": list(self.mult),
        }


def grouping_tolerance(full_sorted: np.ndarray, rel: float = DEFAULT_EIG_TOL) -> float:
    radius = float(np.abs(full_sorted).max(initial=0.0))
    return rel * max(1.0, radius)


def eigendecompose(g: Graph, rel_tol: float = DEFAULT_EIG_TOL) -> Spectrum:
    """Full eigendecomposition of the adjacency matrix, grouped by value.

    Raises NumericalError when the Jacobi sweep cap is hit or the residual
    check ||A v - lambda v|| <= 1e-8 ||A|| fails.
    """
    a = g.adjacency_float()
    evals, evecs = _kernels.jacobi_eigh(a)
    order = np.argsort(-evals, kind="stable")
    full = np.ascontiguousarray(evals[order])
    vectors = np.ascontiguousarray(evecs[:, order])

    norm_a = float(np.linalg.norm(a)) or 1.0
    residual = float(np.abs(a @ vectors - vectors * full[None, :]).max())
    if residual > 1e-8 * norm_a:
        raise NumericalError("eigendecomposition residual above tolerance", residual=residual)

    tol = grouping_tolerance(full, rel_tol)
    distinct: list[float] = []
    mult: list[int] = []
    for lam in full:
        if distinct and distinct[-1] - lam <= tol:
            # extend the current group and keep its mean as representative
            distinct[-1] = (distinct[-1] * mult[-1] + lam) / (mult[-1] + 1)
            mult[-1] += 1
        else:
            distinct.append(float(lam))
            mult.append(1)
    full.setflags(write=False)
    vectors.setflags(write=False)
    darr = np.array(distinct)
    darr.setflags(write=False)
    return Spectrum(full=full, vectors=vectors, distinct=darr, mult=tuple(mult), tol=tol)


def inertia(g: Graph, rel_tol: float = DEFAULT_EIG_TOL, spectrum: Spectrum | None = None) -> Inertia:
    """Counts of positive, zero and negative adjacency eigenvalues."""
    spec = spectrum if spectrum is not None else eigendecompose(g, rel_tol)
    tol = spec.tol
    n_plus = int((spec.full > tol).sum())
    n_minus = int((spec.full < -tol).sum())
    return Inertia(n_plus=n_plus, n_zero=spec.n - n_plus - n_minus, n_minus=n_minus)


def eval_poly_scalar(p: Poly, x: float) -> float:
    """Horner evaluation of p at x."""
    acc = 0.0
    for a in reversed(p.coeffs):
        acc = acc * x + a
    return acc


def adjacency_power_diagonals(g: Graph, k: int) -> np.ndarray:
    """Matrix D with D[v, i] = (A^i)_{vv} for i = 0..k."""
    n = g.n
    a = g.adjacency_float()
    out = np.empty((n, k + 1))
    out[:, 0] = 1.0
    p = np.eye(n)
    for i in range(1, k + 1):
        p = p @ a
        out[:, i] = np.diagonal(p)
    return out


def eval_poly_matrix(p: Poly, g: Graph, spectrum: Spectrum | None = None) -> tuple[np.ndarray, PolyStats]:
    """p(A) by iterated multiplication, plus its diagonal/spectral statistics."""
    a = g.adjacency_float()
    n = g.n
    result = p.coeffs[0] * np.eye(n)
    power = np.eye(n)
    for coeff in p.coeffs[1:]:
        power = power @ a
        if coeff != 0.0:
            result += coeff * power
    diag = np.diagonal(result)
    spec = spectrum if spectrum is not None else eigendecompose(g)
    p_lambda1 = eval_poly_scalar(p, float(spec.full[0]))
    if n >= 2:
        lambda_p = min(eval_poly_scalar(p, float(x)) for x in spec.full[1:])
    else:
        lambda_p = math.inf
    stats = PolyStats(
        W=float(diag.max()),
        w=float(diag.min()),
        lambda_p=float(lambda_p),
        p_lambda1=float(p_lambda1),
    )
    return result, stats
