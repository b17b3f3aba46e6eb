# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernels: cyclic Jacobi eigensolver and two-phase simplex.

Same contracts and pivot/rotation order as the numpy fallback in _pure.py.
"""

import math

import numpy as np

cimport numpy as cnp
from libc.math cimport fabs, sqrt

from ..errors import NumericalError

OPTIMAL = 0
INFEASIBLE = 1
UNBOUNDED = 2


def jacobi_eigh(a_in, int max_sweeps=100, double rel_tol=1e-11):
    """Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations."""
    cdef cnp.ndarray[cnp.float64_t, ndim=2] a = np.array(a_in, dtype=np.float64)
    cdef int n = a.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=2] v = np.eye(n)
    if n == 1:
        return np.diagonal(a).copy(), v
    cdef double[:, :] A = a
    cdef double[:, :] V = v
    cdef double fro = 0.0, offsq, off = 0.0
    cdef double apq, app, aqq, tau, t, c, s, xp, xq
    cdef int sweep, p, q, r
    for p in range(n):
        for q in range(n):
            fro += A[p, q] * A[p, q]
    fro = sqrt(fro)
    if fro == 0.0:
        return np.zeros(n), v
    cdef double skip_tol = 1e-14 * fro
    off = fro
    for sweep in range(max_sweeps):
        offsq = 0.0
        for p in range(n):
            for q in range(n):
                if p != q:
                    offsq += A[p, q] * A[p, q]
        off = sqrt(offsq if offsq > 0.0 else 0.0)
        if off <= rel_tol * fro:
            return np.diagonal(a).copy(), v
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if fabs(apq) <= skip_tol:
                    continue
                app = A[p, p]
                aqq = A[q, q]
                tau = (aqq - app) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + sqrt(1.0 + tau * tau))
                c = 1.0 / sqrt(1.0 + t * t)
                s = t * c
                for r in range(n):
                    xp = A[r, p]
                    xq = A[r, q]
                    A[r, p] = c * xp - s * xq
                    A[r, q] = s * xp + c * xq
                for r in range(n):
                    xp = A[p, r]
                    xq = A[q, r]
                    A[p, r] = c * xp - s * xq
                    A[q, r] = s * xp + c * xq
                A[p, p] = app - t * apq
                A[q, q] = aqq + t * apq
                A[p, q] = 0.0
                A[q, p] = 0.0
                for r in range(n):
                    xp = V[r, p]
                    xq = V[r, q]
                    V[r, p] = c * xp - s * xq
                    V[r, q] = s * xp + c * xq
    raise NumericalError(
        f"Jacobi eigensolver did not converge within {max_sweeps} sweeps", residual=off
    )


cdef void _pivot(double[:, :] T, double[:] zrow, long[:] basis, int i, int j) noexcept:
    cdef int ncols = T.shape[1]
    cdef int m = T.shape[0]
    cdef double piv = T[i, j]
    cdef double factor
    cdef int r, k
    for k in range(ncols):
        T[i, k] /= piv
    for r in range(m):
        if r == i:
            continue
        factor = T[r, j]
        if factor != 0.0:
            for k in range(ncols):
                T[r, k] -= factor * T[i, k]
    factor = zrow[j]
    if factor != 0.0:
        for k in range(ncols):
            zrow[k] -= factor * T[i, k]
    basis[i] = j


cdef void _price_out(double[:] cost, double[:, :] T, long[:] basis, double[:] zrow) noexcept:
    cdef int ncols = T.shape[1]
    cdef int m = T.shape[0]
    cdef int ncost = cost.shape[0]
    cdef double cb
    cdef int i, k
    for k in range(ncols):
        zrow[k] = cost[k] if k < ncost else 0.0
    for i in range(m):
        cb = cost[basis[i]]
        if cb != 0.0:
            for k in range(ncols):
                zrow[k] -= cb * T[i, k]


cdef int _iterate(double[:, :] T, double[:] zrow, long[:] basis, int limit_cols,
                  double pivot_tol, double zero_tol, int max_iter) except -2:
    """Returns -1 at optimality, the entering column when unbounded."""
    cdef int m = T.shape[0]
    cdef int rhs = T.shape[1] - 1
    cdef int it, j, i, enter, leave
    cdef double best, ratio, colmax
    for it in range(max_iter):
        enter = -1
        for j in range(limit_cols):
            if zrow[j] < -pivot_tol:
                enter = j
                break
        if enter < 0:
            return -1
        leave = -1
        best = math.inf
        for i in range(m):
            if T[i, enter] > pivot_tol:
                ratio = T[i, rhs] / T[i, enter]
                if ratio < best - 1e-12 or (fabs(ratio - best) <= 1e-12 and (leave < 0 or basis[i] < basis[leave])):
                    best = ratio
                    leave = i
        if leave < 0:
            colmax = -math.inf
            for i in range(m):
                if T[i, enter] > colmax:
                    colmax = T[i, enter]
            if colmax > zero_tol:
                raise NumericalError("simplex pivot breakdown: best available pivot below threshold")
            return enter
        _pivot(T, zrow, basis, leave, enter)
    raise NumericalError("simplex iteration cap exceeded")


def simplex(A_in, senses_in, b_in, c_in, double feas_tol=1e-7, double pivot_tol=1e-9,
            double zero_tol=1e-12, int max_iter=20000):
    """Two-phase primal simplex: maximize c.x s.t. A x (senses) b, x >= 0."""
    cdef cnp.ndarray[cnp.float64_t, ndim=2] A = np.array(A_in, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] b = np.array(b_in, dtype=np.float64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] senses = np.array(senses_in, dtype=np.int64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] c = np.array(c_in, dtype=np.float64)
    cdef int m = A.shape[0]
    cdef int n0 = A.shape[1]
    cdef int i, j

    for i in range(m):
        if b[i] < 0:
            for j in range(n0):
                A[i, j] = -A[i, j]
            b[i] = -b[i]
            senses[i] = -senses[i]

    cdef int n_slack = 0, n_art = 0
    for i in range(m):
        if senses[i] != 0:
            n_slack += 1
        if senses[i] >= 0:
            n_art += 1
    cdef int ncols = n0 + n_slack + n_art
    cdef int art_start = n0 + n_slack
    cdef cnp.ndarray[cnp.float64_t, ndim=2] Tarr = np.zeros((m, ncols + 1))
    Tarr[:, :n0] = A
    Tarr[:, ncols] = b
    cdef cnp.ndarray[cnp.int64_t, ndim=1] basis_arr = np.zeros(m, dtype=np.int64)
    cdef int si = 0, ai = 0
    for i in range(m):
        if senses[i] < 0:
            Tarr[i, n0 + si] = 1.0
            basis_arr[i] = n0 + si
            si += 1
        elif senses[i] > 0:
            Tarr[i, n0 + si] = -1.0
            si += 1
            Tarr[i, art_start + ai] = 1.0
            basis_arr[i] = art_start + ai
            ai += 1
        else:
            Tarr[i, art_start + ai] = 1.0
            basis_arr[i] = art_start + ai
            ai += 1

    cdef cnp.ndarray[cnp.float64_t, ndim=1] zrow_arr = np.zeros(ncols + 1)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] cost = np.zeros(ncols)
    cdef int res
    cdef double p1val
    cdef list drop, keep

    if n_art:
        cost[art_start:] = 1.0
        _price_out(cost, Tarr, basis_arr, zrow_arr)
        res = _iterate(Tarr, zrow_arr, basis_arr, ncols, pivot_tol, zero_tol, max_iter)
        if res != -1:
            raise NumericalError("phase-1 objective reported unbounded")
        p1val = 0.0
        for i in range(m):
            if basis_arr[i] >= art_start:
                p1val += Tarr[i, ncols]
        if p1val > feas_tol:
            return INFEASIBLE, None, 0.0, None
        drop = []
        for i in range(m):
            if basis_arr[i] >= art_start:
                res = -1
                for j in range(art_start):
                    if fabs(Tarr[i, j]) > pivot_tol:
                        res = j
                        break
                if res >= 0:
                    _pivot(Tarr, zrow_arr, basis_arr, i, res)
                else:
                    drop.append(i)
        if drop:
            keep = [i for i in range(m) if i not in drop]
            Tarr = np.ascontiguousarray(Tarr[keep, :])
            basis_arr = basis_arr[np.array(keep, dtype=np.intp)]
            m = Tarr.shape[0]

    Tarr = np.ascontiguousarray(np.hstack([Tarr[:, :art_start], Tarr[:, ncols:ncols + 1]]))
    cdef int limit = art_start

    cost = np.zeros(limit)
    cost[:n0] = -c
    zrow_arr = np.zeros(limit + 1)
    _price_out(cost, Tarr, basis_arr, zrow_arr)
    cdef int unb = _iterate(Tarr, zrow_arr, basis_arr, limit, pivot_tol, zero_tol, max_iter)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] x = np.zeros(limit)
    for i in range(m):
        x[basis_arr[i]] = Tarr[i, limit]
    xvars = x[:n0].copy()
    cdef cnp.ndarray[cnp.float64_t, ndim=1] ray
    if unb != -1:
        ray = np.zeros(limit)
        ray[unb] = 1.0
        for i in range(m):
            ray[basis_arr[i]] = -Tarr[i, unb]
        return UNBOUNDED, xvars, math.inf, ray[:n0].copy()
    return OPTIMAL, xvars, float(np.dot(c, xvars)), None
