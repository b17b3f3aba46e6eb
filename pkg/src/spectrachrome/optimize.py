"""Dense linear programming and small weighted-binary programs.

The LP solver is a two-phase primal simplex with Bland's rule over free
variables (internally split into nonnegative pairs).  The binary programs
that drive the bound optimization are solved by enumerating assignments
in nondecreasing objective order, testing each with an LP feasibility
subproblem; the first feasible assignment is optimal because the
objective is fully determined by the assignment.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable, Sequence

import numpy as np

from . import _kernels
from .errors import NumericalError, ResourceLimitError
from .spectral import Poly, Spectrum

#: Default feasibility tolerance for accepted LP solutions.
LP_FEAS_TOL = 1e-7
#: Pivot admissibility threshold inside the simplex kernel.
LP_PIVOT_TOL = 1e-9

#: Strictness margin used to encode `> 0` / `< 0` inside sign-pattern LPs.
#: Signs are scale invariant, so 1 is as general as any positive value.
PATTERN_EPS = 1.0

ENUMERATION_CAP = 24

LE, EQ, GE = "<=", "=", ">="
_SENSE_CODE = {LE: -1, EQ: 0, GE: 1}


class LpStatus(Enum):
    OPTIMAL = "OPTIMAL"
    INFEASIBLE = "INFEASIBLE"
    UNBOUNDED = "UNBOUNDED"


@dataclass
class LinearProgram:
    """max/min c.x over free variables subject to rows (coeffs, rel, rhs).

    Optional per-variable bounds are translated into extra rows; variables
    are otherwise unrestricted in sign.
    """

    nvars: int
    sense: str = "max"
    objective: Sequence[float] = ()
    rows: list[tuple[Sequence[float], str, float]] = field(default_factory=list)
    lower: Sequence[float | None] | None = None
    upper: Sequence[float | None] | None = None

    def add_row(self, coeffs: Sequence[float], rel: str, rhs: float) -> None:
        if len(coeffs) != self.nvars:
            raise ValueError(f"row has {len(coeffs)} coefficients, expected {self.nvars}")
        if rel not in _SENSE_CODE:
            raise ValueError(f"relation must be one of <=, =, >=; got {rel!r}")
        self.rows.append((list(coeffs), rel, float(rhs)))

    def dump(self) -> str:
        """Plain text tableau, for debugging."""
        lines = [f"{self.sense} " + " ".join(f"{c:+g}*x{i}" for i, c in enumerate(self.objective))]
        for coeffs, rel, rhs in self.rows:
            lines.append(" ".join(f"{c:+g}*x{i}" for i, c in enumerate(coeffs)) + f" {rel} {rhs:g}")
        return "\n".join(lines)


@dataclass(frozen=True)
class LpSolution:
    status: LpStatus
    x: np.ndarray | None = None
    value: float | None = None
    ray: np.ndarray | None = None


def solve_lp(lp: LinearProgram, feas_tol: float | None = None, pivot_tol: float | None = None) -> LpSolution:
    """Solve an LP over free variables with the simplex kernel.

    OPTIMAL solutions are re-checked against every row at feas_tol;
    UNBOUNDED comes with a certificate ray in the original variables.
    Tolerances default to the module-level LP_FEAS_TOL / LP_PIVOT_TOL,
    which the CLI may override.
    """
    feas_tol = LP_FEAS_TOL if feas_tol is None else feas_tol
    pivot_tol = LP_PIVOT_TOL if pivot_tol is None else pivot_tol
    n = lp.nvars
    if lp.sense not in ("max", "min"):
        raise ValueError("sense must be 'max' or 'min'")
    obj = np.zeros(n) if not len(lp.objective) else np.asarray(lp.objective, dtype=np.float64)
    if obj.shape != (n,):
        raise ValueError("objective length mismatch")
    if not np.isfinite(obj).all():
        raise ValueError("objective has non-finite coefficients")

    rows = list(lp.rows)
    for bound, rel in ((lp.lower, GE), (lp.upper, LE)):
        if bound is not None:
            for i, val in enumerate(bound):
                if val is not None:
                    coeffs = [0.0] * n
                    coeffs[i] = 1.0
                    rows.append((coeffs, rel, float(val)))

    m = len(rows)
    A = np.zeros((m, n))
    b = np.zeros(m)
    senses = np.zeros(m, dtype=np.int64)
    for i, (coeffs, rel, rhs) in enumerate(rows):
        A[i] = coeffs
        b[i] = rhs
        senses[i] = _SENSE_CODE[rel]
    if not (np.isfinite(A).all() and np.isfinite(b).all()):
        raise ValueError("constraints have non-finite coefficients")

    # free variables: x = u - v with u, v >= 0
    A2 = np.hstack([A, -A])
    c2 = np.concatenate([obj, -obj])
    if lp.sense == "min":
        c2 = -c2

    status, xsplit, value, raysplit = _kernels.simplex(
        A2, senses, b, c2, feas_tol=feas_tol, pivot_tol=pivot_tol
    )
    if status == _kernels.INFEASIBLE:
        return LpSolution(status=LpStatus.INFEASIBLE)
    x = xsplit[:n] - xsplit[n:]
    if status == _kernels.UNBOUNDED:
        ray = raysplit[:n] - raysplit[n:]
        return LpSolution(status=LpStatus.UNBOUNDED, x=x, ray=ray)

    resid = A @ x - b
    worst = 0.0
    for i in range(m):
        if senses[i] < 0:
            worst = max(worst, resid[i])
        elif senses[i] > 0:
            worst = max(worst, -resid[i])
        else:
            worst = max(worst, abs(resid[i]))
    if worst > feas_tol:
        raise NumericalError("simplex returned an infeasible optimum", residual=worst)
    val = float(obj @ x)
    return LpSolution(status=LpStatus.OPTIMAL, x=x, value=val)


# ---------------------------------------------------------------------------
# sign patterns over the distinct eigenvalues


class Sign(Enum):
    NEG = -1
    ZERO = 0
    POS = 1


SignPattern = tuple[Sign, ...]


def vandermonde_rows(distinct: np.ndarray, k: int) -> np.ndarray:
    """Row j holds (theta_j^0, ..., theta_j^k)."""
    return np.vander(np.asarray(distinct, dtype=np.float64), k + 1, increasing=True)


def trace_row(spectrum: Spectrum, k: int) -> np.ndarray:
    """Coefficients of sum_j m_j p(theta_j) as a linear form in a_0..a_k."""
    v = vandermonde_rows(spectrum.distinct, k)
    m = np.asarray(spectrum.mult, dtype=np.float64)
    return m @ v


def feasible_poly_for_pattern(
    spectrum: Spectrum,
    pattern: SignPattern,
    k: int,
    extra: Iterable[tuple[Sequence[float], str, float]] = (),
    eps: float = PATTERN_EPS,
) -> Poly | None:
    """A degree-<=k polynomial realizing the sign pattern, or None.

    POS means p(theta_j) >= eps, NEG means <= -eps, ZERO means exactly 0;
    `extra` rows (same coefficient layout a_0..a_k) are added verbatim.
    Infeasibility is a normal None return.
    """
    if eps <= 0:
        raise ValueError("eps must be positive")
    if len(pattern) != spectrum.n_distinct:
        raise ValueError("pattern length must match the number of distinct eigenvalues")
    v = vandermonde_rows(spectrum.distinct, k)
    lp = LinearProgram(nvars=k + 1)
    for j, sign in enumerate(pattern):
        if sign is Sign.POS:
            lp.add_row(v[j], GE, eps)
        elif sign is Sign.NEG:
            lp.add_row(v[j], LE, -eps)
        else:
            lp.add_row(v[j], EQ, 0.0)
    for coeffs, rel, rhs in extra:
        lp.add_row(coeffs, rel, rhs)
    sol = solve_lp(lp)
    if sol.status is not LpStatus.OPTIMAL:
        return None
    return Poly(tuple(sol.x))


def enumerate_binary_ascending(weights: Sequence[float]):
    """Yield (weight, b) for every b in {0,1}^m, nondecreasing in weight.

    Ties are not ordered here; callers needing the lexicographic tie-break
    must drain the whole weight class (see milp_min_weighted_binaries).
    """
    m = len(weights)
    order = sorted(range(m), key=lambda i: (weights[i], i))
    w = [weights[i] for i in order]

    def to_b(indices: tuple[int, ...]) -> tuple[int, ...]:
        b = [0] * m
        for pos in indices:
            b[order[pos]] = 1
        return tuple(b)

    heap = [(0.0, to_b(()), ())]
    while heap:
        weight, b, positions = heapq.heappop(heap)
        yield weight, b
        last = positions[-1] if positions else -1
        if last + 1 < m:
            grown = positions + (last + 1,)
            heapq.heappush(heap, (weight + w[last + 1], to_b(grown), grown))
            if positions:
                shifted = positions[:-1] + (last + 1,)
                heapq.heappush(heap, (weight - w[last] + w[last + 1], to_b(shifted), shifted))


def milp_min_weighted_binaries(
    weights: Sequence[float],
    feasibility: Callable[[tuple[int, ...]], bool],
    probe_budget: int = 50_000,
) -> tuple[float, tuple[int, ...]] | None:
    """Minimize w.b over b in {0,1}^m subject to the feasibility callback.

    Assignments are generated lazily in nondecreasing w.b order; the first
    feasible one fixes the optimum and its whole weight class is then
    drained so that ties resolve to the lexicographically smallest b.
    Returns None when no assignment is feasible.  `probe_budget` caps the
    number of feasibility probes (the optimum can sit arbitrarily deep in
    the enumeration when many binaries are forced on).
    """
    m = len(weights)
    if m > ENUMERATION_CAP:
        raise ResourceLimitError(
            f"{m} binaries exceed the enumeration cap {ENUMERATION_CAP}; "
            "a branch-and-bound fallback would be needed at this size"
        )
    if any(w < 0 for w in weights):
        raise ValueError("weights must be nonnegative")
    best: tuple[float, tuple[int, ...]] | None = None
    probes = 0
    for weight, b in enumerate_binary_ascending(weights):
        if best is not None and weight > best[0] + 1e-12:
            break
        if best is not None and b > best[1]:
            continue
        probes += 1
        if probes > probe_budget:
            raise ResourceLimitError(
                f"binary enumeration exceeded {probe_budget} feasibility probes; "
                "a branch-and-bound fallback would be needed at this size"
            )
        if feasibility(b):
            best = (weight, b)
    return best
