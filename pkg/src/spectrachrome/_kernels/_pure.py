"""Pure numpy implementations of the hot kernels.

These mirror the compiled Cython kernels in `_fast.pyx`; the package
selects whichever is available at import time.  Both backends follow the
same pivot and rotation order, so results agree up to floating noise.
"""

from __future__ import annotations

import math

import numpy as np

from ..errors import NumericalError

# simplex status codes shared by both backends
OPTIMAL = 0
INFEASIBLE = 1
UNBOUNDED = 2


def jacobi_eigh(a, max_sweeps: int = 100, rel_tol: float = 1e-11):
    """Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.

    Returns (eigenvalues, eigenvectors-as-columns), unsorted.  Raises
    NumericalError when the off-diagonal mass has not dropped below
    rel_tol * ||A||_F after max_sweeps sweeps.
    """
    a = np.array(a, dtype=np.float64)
    n = a.shape[0]
    v = np.eye(n)
    if n == 1:
        return a.diagonal().copy(), v
    fro = float(np.linalg.norm(a))
    if fro == 0.0:
        return np.zeros(n), v
    skip_tol = 1e-14 * fro
    off = fro
    for _ in range(max_sweeps):
        # sum off-diagonal squares directly: subtracting the diagonal mass
        # from the total cancels catastrophically once nearly converged
        offdiag = a.copy()
        np.fill_diagonal(offdiag, 0.0)
        offsq = float((offdiag * offdiag).sum())
        off = math.sqrt(max(offsq, 0.0))
        if off <= rel_tol * fro:
            return np.diagonal(a).copy(), v
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= skip_tol:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                tau = (aqq - app) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                vcol_p = v[:, p].copy()
                vcol_q = v[:, q].copy()
                v[:, p] = c * vcol_p - s * vcol_q
                v[:, q] = s * vcol_p + c * vcol_q
    raise NumericalError(
        f"Jacobi eigensolver did not converge within {max_sweeps} sweeps", residual=off
    )


def _pivot(T, zrow, basis, i, j):
    piv = T[i, j]
    T[i, :] /= piv
    col = T[:, j].copy()
    col[i] = 0.0
    T -= np.outer(col, T[i, :])
    factor = zrow[j]
    if factor != 0.0:
        zrow -= factor * T[i, :]
    basis[i] = j


def _price_out(cost, T, basis):
    """Reduced-cost row (with rhs slot) for the given basis."""
    zrow = np.zeros(T.shape[1])
    zrow[: cost.shape[0]] = cost
    for i, bv in enumerate(basis):
        cb = cost[bv]
        if cb != 0.0:
            zrow -= cb * T[i, :]
    return zrow


def _iterate(T, zrow, basis, limit_cols, pivot_tol, zero_tol, max_iter):
    """Bland-rule simplex loop minimizing the priced-out cost.

    Returns None at optimality or the entering column index when the
    problem is unbounded in that column.
    """
    for _ in range(max_iter):
        enter = -1
        for j in range(limit_cols):
            if zrow[j] < -pivot_tol:
                enter = j
                break
        if enter < 0:
            return None
        leave = -1
        best = math.inf
        col = T[:, enter]
        for i in range(T.shape[0]):
            if col[i] > pivot_tol:
                ratio = T[i, -1] / col[i]
                if ratio < best - 1e-12 or (abs(ratio - best) <= 1e-12 and (leave < 0 or basis[i] < basis[leave])):
                    best = ratio
                    leave = i
        if leave < 0:
            if float(col.max(initial=-math.inf)) > zero_tol:
                raise NumericalError("simplex pivot breakdown: best available pivot below threshold")
            return enter
        _pivot(T, zrow, basis, leave, enter)
    raise NumericalError("simplex iteration cap exceeded")


def simplex(A, senses, b, c, feas_tol=1e-7, pivot_tol=1e-9, zero_tol=1e-12, max_iter=20000):
    """Two-phase primal simplex: maximize c.x s.t. A x (senses) b, x >= 0.

    senses: -1 for <=, 0 for =, +1 for >=.  Returns (status, x, value, ray)
    with status OPTIMAL/INFEASIBLE/UNBOUNDED; x is the optimum (or the
    feasible point reached when unbounded) and ray the improving direction.
    """
    A = np.array(A, dtype=np.float64)
    b = np.array(b, dtype=np.float64)
    senses = np.array(senses, dtype=np.int64)
    c = np.array(c, dtype=np.float64)
    m, n0 = A.shape

    flip = b < 0
    A[flip] *= -1.0
    b[flip] *= -1.0
    senses[flip] *= -1

    n_slack = int((senses != 0).sum())
    n_art = int((senses >= 0).sum())
    ncols = n0 + n_slack + n_art
    art_start = n0 + n_slack
    T = np.zeros((m, ncols + 1))
    T[:, :n0] = A
    T[:, -1] = b
    basis = [0] * m
    si = 0
    ai = 0
    for i in range(m):
        if senses[i] < 0:
            T[i, n0 + si] = 1.0
            basis[i] = n0 + si
            si += 1
        elif senses[i] > 0:
            T[i, n0 + si] = -1.0
            si += 1
            T[i, art_start + ai] = 1.0
            basis[i] = art_start + ai
            ai += 1
        else:
            T[i, art_start + ai] = 1.0
            basis[i] = art_start + ai
            ai += 1

    # phase 1: minimize the artificial mass
    if n_art:
        cost1 = np.zeros(ncols)
        cost1[art_start:] = 1.0
        zrow = _price_out(cost1, T, basis)
        res = _iterate(T, zrow, basis, ncols, pivot_tol, zero_tol, max_iter)
        if res is not None:
            raise NumericalError("phase-1 objective reported unbounded")
        p1val = sum(T[i, -1] for i in range(m) if basis[i] >= art_start)
        if p1val > feas_tol:
            return INFEASIBLE, None, 0.0, None
        # drive leftover artificials out of the basis, drop redundant rows
        drop = []
        for i in range(m):
            if basis[i] >= art_start:
                enter = -1
                for j in range(art_start):
                    if abs(T[i, j]) > pivot_tol:
                        enter = j
                        break
                if enter >= 0:
                    _pivot(T, zrow, basis, i, enter)
                else:
                    drop.append(i)
        if drop:
            keep = [i for i in range(m) if i not in drop]
            T = T[keep, :]
            basis = [basis[i] for i in keep]
            m = len(basis)
    T = np.hstack([T[:, :art_start], T[:, -1:]])
    limit = art_start

    # phase 2: minimize -c.x over the structural and slack columns
    cost2 = np.zeros(limit)
    cost2[:n0] = -c
    zrow = _price_out(cost2, T, basis)
    unb = _iterate(T, zrow, basis, limit, pivot_tol, zero_tol, max_iter)
    x = np.zeros(limit)
    for i in range(m):
        x[basis[i]] = T[i, -1]
    xvars = x[:n0].copy()
    if unb is not None:
        ray = np.zeros(limit)
        ray[unb] = 1.0
        for i in range(m):
            ray[basis[i]] = -T[i, unb]
        return UNBOUNDED, xvars, math.inf, ray[:n0].copy()
    return OPTIMAL, xvars, float(c @ xvars), None
