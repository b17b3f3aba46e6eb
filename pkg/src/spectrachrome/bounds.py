"""Eigenvalue lower bounds on the distance-k chromatic number.

Every bound optimizes a degree-<=k polynomial through LP feasibility
subproblems driven by sign assignments on the distinct eigenvalues.  All
reported values also lower-bound the quantum variant of the parameter,
which is what the certification step exploits: whenever a bound meets the
exact chromatic number of the k-th power graph, the quantum value is
pinned to the same number.

Method summary (n vertices, distinct eigenvalues theta_0 > ... > theta_d
with multiplicities m_j):

* INERTIAL1: minimize sum of m_j over eigenvalues where p stays >= w(p),
  after normalizing w(p) = 0; the bound is n divided by the optimum.
* INERTIAL2: over positive-count targets ell, maximize
  1 + (negative count)/ell subject to a zero trace of p(A); needs the
  graph k-partially walk-regular (any graph qualifies at k = 1).
* RATIO: maximize (p(lambda_1) - lambda(p)) / (W(p) - lambda(p)) through
  one LP per (vertex class, candidate argmin eigenvalue).
* INERTIA_K1: 1 + max(n+/n-, n-/n+) from the adjacency inertia (k = 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ResourceLimitError
from .exact import DEFAULT_BUDGET, chromatic_number_exact
from .graphs import Graph, connected_components, induced_subgraph, is_k_partially_walk_regular, power_graph
from .optimize import (
    EQ,
    GE,
    LE,
    LinearProgram,
    LpStatus,
    Sign,
    enumerate_binary_ascending,
    feasible_poly_for_pattern,
    milp_min_weighted_binaries,
    solve_lp,
    trace_row,
    vandermonde_rows,
)
from .spectral import Poly, Spectrum, adjacency_power_diagonals, eigendecompose, inertia

INERTIAL1 = "INERTIAL1"
INERTIAL2 = "INERTIAL2"
RATIO = "RATIO"
INERTIA_K1 = "INERTIA_K1"

METHODS = (INERTIAL1, INERTIAL2, RATIO, INERTIA_K1)

#: Backoff when ceiling a float lower bound to an integer one.
CEIL_GUARD = 1e-7

#: Strictness margin for p(lambda_1) > lambda(p) in the ratio LP.
RATIO_STRICT_EPS = 1e-6

#: Cap on distinct eigenvalues for the three-way sign enumeration.
PATTERN_CAP = 15


@dataclass
class BoundReport:
    method: str
    k: int
    raw_value: float
    integer_bound: int | None
    witness_poly: Poly | None
    applicable: bool
    notes: list[str] = field(default_factory=list)

    def to_json_dict(self, graph_name: str = "", n: int | None = None) -> dict:
        return {
            "graph": graph_name,
            "n": n,
            "k": self.k,
            "method": self.method,
            "raw_value": self.raw_value if self.applicable else None,
            "integer_bound": self.integer_bound,
            "witness_poly": list(self.witness_poly.coeffs) if self.witness_poly else None,
            "applicable": self.applicable,
            "notes": list(self.notes),
        }


@dataclass
class Certificate:
    chi_k_exact: int
    best_bound: BoundReport
    certified: bool
    quantum_value: int | None
    reports: list[BoundReport] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def to_json_dict(self, graph_name: str = "", n: int | None = None) -> dict:
        return {
            "graph": graph_name,
            "n": n,
            "k": self.best_bound.k,
            "chi_k_exact": self.chi_k_exact,
            "best_bound": self.best_bound.to_json_dict(graph_name, n),
            "certified": self.certified,
            "quantum_value": self.quantum_value,
            "bounds": [r.to_json_dict(graph_name, n) for r in self.reports],
            "notes": list(self.notes),
        }


def integer_floor_of_lower_bound(raw: float) -> int:
    """Smallest integer consistent with the float lower bound raw."""
    return math.ceil(raw - CEIL_GUARD)


def _inapplicable(method: str, k: int, notes: list[str]) -> BoundReport:
    return BoundReport(
        method=method,
        k=k,
        raw_value=float("nan"),
        integer_bound=None,
        witness_poly=None,
        applicable=False,
        notes=notes,
    )


def _unique_rows(rows: np.ndarray) -> list[int]:
    """Indices of representative rows, first occurrence order, 1e-12 rounding."""
    seen: dict[bytes, int] = {}
    reps = []
    for i, row in enumerate(rows):
        key = np.round(row, 12).tobytes()
        if key not in seen:
            seen[key] = i
            reps.append(i)
    return reps


# ---------------------------------------------------------------------------
# first inertial bound


def inertial1_bound(g: Graph, k: int, spectrum: Spectrum | None = None) -> BoundReport:
    """n / (optimal count of eigenvalues with p above the diagonal minimum).

    The count is minimized over sign assignments b on the distinct
    eigenvalues: b_j = 0 forces p(theta_j) strictly negative, b_j = 1 is
    free, and the weight of b (total multiplicity) bounds the eigenvalue
    positions where p >= w(p) = 0.  Polynomial negation maps the mirrored
    count |{p <= W}| into the same search space, so one pass covers both.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    spec = spectrum if spectrum is not None else eigendecompose(g)
    n = g.n
    v = vandermonde_rows(spec.distinct, k)
    weights = [float(m) for m in spec.mult]
    notes: list[str] = []

    def run_program(extra_rows) -> tuple[float, tuple[int, ...], Poly] | None:
        produced: dict[tuple[int, ...], Poly] = {}

        def feasible(b: tuple[int, ...]) -> bool:
            lp = LinearProgram(nvars=k + 1)
            for coeffs, rel, rhs in extra_rows:
                lp.add_row(coeffs, rel, rhs)
            for j, bj in enumerate(b):
                if not bj:
                    lp.add_row(v[j], LE, -1.0)
            sol = solve_lp(lp)
            if sol.status is LpStatus.OPTIMAL:
                produced[b] = Poly(tuple(sol.x))
                return True
            return False

        res = milp_min_weighted_binaries(weights, feasible)
        if res is None:
            return None
        value, b = res
        return value, b, produced[b]

    if is_k_partially_walk_regular(g, k):
        tr = trace_row(spec, k)
        best = run_program([(tr, EQ, 0.0)])
        notes.append("walk-regular program: zero-trace normalization, single run")
    else:
        diags = adjacency_power_diagonals(g, k)
        reps = _unique_rows(diags)
        notes.append(f"per-vertex normalization over {len(reps)} diagonal classes")
        best = None
        for u in reps:
            rows = [(diags[u], EQ, 0.0)]
            seen = set()
            for i in range(g.n):
                if i == u:
                    continue
                key = np.round(diags[i], 12).tobytes()
                if key in seen:
                    continue
                seen.add(key)
                rows.append((diags[i], GE, 0.0))
            cand = run_program(rows)
            if cand is not None and (best is None or cand[0] < best[0] - 1e-12):
                best = cand

    if best is None:
        return _inapplicable(INERTIAL1, k, notes + ["no feasible sign assignment"])
    optimum, b, poly = best
    raw = n / optimum
    notes.append("assignment " + "".join(str(x) for x in b) + f" with weight {optimum:g}")
    return BoundReport(
        method=INERTIAL1,
        k=k,
        raw_value=raw,
        integer_bound=integer_floor_of_lower_bound(raw),
        witness_poly=poly,
        applicable=True,
        notes=notes,
    )


# ---------------------------------------------------------------------------
# second inertial bound


def _min_root_count(pattern: tuple[Sign, ...]) -> int:
    """Minimum number of real roots (with multiplicity) any polynomial
    realizing the sign pattern over the descending eigenvalues must have.

    Every ZERO position pins a root; between consecutive non-ZERO
    positions the root count in the gap must be odd when the signs flip
    and even otherwise, so a parity fix is added on top of the pinned
    roots of each gap.
    """
    idx = [i for i, s in enumerate(pattern) if s is not Sign.ZERO]
    if not idx:
        return len(pattern)
    total = idx[0] + (len(pattern) - 1 - idx[-1])
    for a, b in zip(idx, idx[1:]):
        pinned = b - a - 1
        flips = pattern[a] is not pattern[b]
        if flips != bool(pinned % 2):
            pinned += 1
        total += pinned
    return total


def _realizable_sums(mult: tuple[int, ...]) -> dict[int, list[int]]:
    """Map from achievable positive-multiplicity totals to subset masks."""
    d1 = len(mult)
    by_sum: dict[int, list[int]] = {}
    for mask in range(1, 1 << d1):
        total = sum(mult[j] for j in range(d1) if mask >> j & 1)
        by_sum.setdefault(total, []).append(mask)
    return by_sum


def inertial2_bound(
    g: Graph,
    k: int,
    spectrum: Spectrum | None = None,
    trace_rel: str = EQ,
) -> BoundReport:
    """1 + (negatives)/(positives) of p over the spectrum, maximized.

    Needs a k-partially walk-regular graph for k >= 2 (no condition at
    k = 1).  For each achievable positive-multiplicity target ell, sign
    patterns with that positive weight are tested by LP together with the
    zero-trace row; the value 1 + (n - ell - zero_weight)/ell is maximized.
    `trace_rel` switches the trace row between equality (the program
    definition) and a one-sided >= 0 relaxation (used by property tests).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if k >= 2 and not is_k_partially_walk_regular(g, k):
        return _inapplicable(
            INERTIAL2, k, [f"graph is not {k}-partially walk-regular; bound needs it for k >= 2"]
        )
    spec = spectrum if spectrum is not None else eigendecompose(g)

    if spec.mult[0] > 1 and g.n > 1:
        return _per_component_max(
            g, k, INERTIAL2, lambda comp, cs: inertial2_bound(comp, k, cs, trace_rel)
        )

    n = g.n
    d1 = spec.n_distinct
    if d1 > PATTERN_CAP:
        raise ResourceLimitError(
            f"{d1} distinct eigenvalues exceed the sign-pattern cap {PATTERN_CAP}"
        )
    v = vandermonde_rows(spec.distinct, k)
    tr = trace_row(spec, k)
    mult = spec.mult

    best_value = -math.inf
    best: tuple[tuple[Sign, ...], Poly, int] | None = None
    by_sum = _realizable_sums(mult)
    for ell in sorted(by_sum):
        if ell > n - 1:
            continue
        # the best conceivable value at this ell is n/ell
        if best is not None and n / ell <= best_value + 1e-12:
            break
        for mask in sorted(by_sum[ell]):
            pos = [j for j in range(d1) if mask >> j & 1]
            rest = [j for j in range(d1) if not mask >> j & 1]
            rest_weights = [float(mult[j]) for j in rest]
            found_zero_weight: float | None = None
            found: tuple[tuple[Sign, ...], Poly] | None = None
            for zweight, zb in enumerate_binary_ascending(rest_weights):
                if found_zero_weight is not None and zweight > found_zero_weight + 1e-12:
                    break
                pattern = [Sign.NEG] * d1
                for j in pos:
                    pattern[j] = Sign.POS
                for idx, j in enumerate(rest):
                    if zb[idx]:
                        pattern[j] = Sign.ZERO
                pattern_t = tuple(pattern)
                if _min_root_count(pattern_t) > k:
                    continue
                value = 1.0 + (n - ell - zweight) / ell
                if value <= best_value + 1e-12:
                    break
                poly = feasible_poly_for_pattern(spec, pattern_t, k, extra=[(tr, trace_rel, 0.0)])
                if poly is not None:
                    found_zero_weight = zweight
                    found = (pattern_t, poly)
                    break
            if found is not None:
                value = 1.0 + (n - ell - found_zero_weight) / ell
                if value > best_value + 1e-12:
                    best_value = value
                    best = (found[0], found[1], ell)

    if best is None:
        return _inapplicable(INERTIAL2, k, ["no feasible sign pattern"])
    pattern, poly, ell = best
    sig = "".join({Sign.NEG: "-", Sign.ZERO: "0", Sign.POS: "+"}[s] for s in pattern)
    notes = [f"pattern {sig} with positive weight {ell}"]
    return BoundReport(
        method=INERTIAL2,
        k=k,
        raw_value=best_value,
        integer_bound=integer_floor_of_lower_bound(best_value),
        witness_poly=poly,
        applicable=True,
        notes=notes,
    )


# ---------------------------------------------------------------------------
# ratio bound


def ratio_bound(g: Graph, k: int, spectrum: Spectrum | None = None) -> BoundReport:
    """(p(lambda_1) - lambda(p)) / (W(p) - lambda(p)), maximized by LP.

    Under the scale normalization W(p) - lambda(p) = 1 the objective is
    p(theta_0) - p(theta_ell); one LP is solved per (vertex diagonal
    class, candidate argmin eigenvalue index ell).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    spec = spectrum if spectrum is not None else eigendecompose(g)
    n = g.n
    if n == 1:
        return _inapplicable(RATIO, k, ["single vertex: no second eigenvalue"])
    if spec.mult[0] > 1:
        return _per_component_max(g, k, RATIO, lambda comp, cs: ratio_bound(comp, k, cs))
    d = spec.n_distinct - 1
    if d == 0:
        return _inapplicable(RATIO, k, ["single distinct eigenvalue"])

    v = vandermonde_rows(spec.distinct, k)
    diags = adjacency_power_diagonals(g, k)
    reps = _unique_rows(diags)

    best_value = -math.inf
    best_poly: Poly | None = None
    notes: list[str] = [f"{len(reps)} diagonal classes x {d} eigenvalue slots"]
    for u in reps:
        seen = set()
        diag_rows = []
        for i in range(n):
            if i == u:
                continue
            row = diags[i] - diags[u]
            if np.abs(row).max() < 1e-12:
                continue
            key = np.round(row, 12).tobytes()
            if key not in seen:
                seen.add(key)
                diag_rows.append(row)
        for ell in range(1, d + 1):
            lp = LinearProgram(nvars=k + 1, sense="max", objective=v[0] - v[ell])
            for row in diag_rows:
                lp.add_row(row, LE, 0.0)
            lp.add_row(diags[u] - v[ell], EQ, 1.0)
            for j in range(1, d + 1):
                lp.add_row(v[0] - v[j], GE, RATIO_STRICT_EPS)
                if j != ell:
                    lp.add_row(v[j] - v[ell], GE, 0.0)
            sol = solve_lp(lp)
            if sol.status is LpStatus.OPTIMAL and sol.value > best_value + 1e-9:
                best_value = sol.value
                best_poly = Poly(tuple(sol.x))
            elif sol.status is LpStatus.UNBOUNDED:
                notes.append(f"LP (u={u}, ell={ell}) unbounded; skipped")

    if best_poly is None:
        return _inapplicable(RATIO, k, notes + ["all LPs infeasible"])
    return BoundReport(
        method=RATIO,
        k=k,
        raw_value=best_value,
        integer_bound=integer_floor_of_lower_bound(best_value),
        witness_poly=best_poly,
        applicable=True,
        notes=notes,
    )


# ---------------------------------------------------------------------------
# inertia bound at k = 1


def inertia_k1_bound(g: Graph, spectrum: Spectrum | None = None) -> BoundReport:
    """1 + max(n+/n-, n-/n+) from the adjacency inertia."""
    spec = spectrum if spectrum is not None else eigendecompose(g)
    inert = inertia(g, spectrum=spec)
    if inert.n_plus == 0 or inert.n_minus == 0:
        return BoundReport(
            method=INERTIA_K1,
            k=1,
            raw_value=1.0,
            integer_bound=1,
            witness_poly=Poly((0.0, 1.0)),
            applicable=True,
            notes=["edgeless graph: inertia ratio undefined, trivial bound 1"],
        )
    raw = 1.0 + max(inert.n_plus / inert.n_minus, inert.n_minus / inert.n_plus)
    return BoundReport(
        method=INERTIA_K1,
        k=1,
        raw_value=raw,
        integer_bound=integer_floor_of_lower_bound(raw),
        witness_poly=Poly((0.0, 1.0)),
        applicable=True,
        notes=[f"inertia ({inert.n_plus}, {inert.n_zero}, {inert.n_minus})"],
    )


# ---------------------------------------------------------------------------
# helpers and certification


def _per_component_max(g: Graph, k: int, method: str, runner) -> BoundReport:
    """Run a bound per connected component and keep the maximum.

    Used when the top eigenvalue is degenerate (tied spectral radii of
    several components): the distance-k chromatic number of a disjoint
    union is the maximum over components, so the maximum of per-component
    lower bounds stays a lower bound.
    """
    comps = connected_components(g)
    if len(comps) == 1:
        # connected yet top eigenvalue degenerate within tolerance: the
        # top-gap assumptions cannot be certified numerically
        return _inapplicable(
            method, k, ["top eigenvalue degenerate within tolerance on a connected graph"]
        )
    best: BoundReport | None = None
    for comp in comps:
        sub = induced_subgraph(g, comp)
        if sub.n == 1:
            rep = BoundReport(
                method=method,
                k=k,
                raw_value=1.0,
                integer_bound=1,
                witness_poly=None,
                applicable=True,
                notes=["isolated vertex component"],
            )
        else:
            rep = runner(sub, None)
        if not rep.applicable:
            continue
        if best is None or rep.raw_value > best.raw_value + 1e-12:
            best = rep
    if best is None:
        return _inapplicable(method, k, ["no component produced an applicable bound"])
    best.notes.append(f"maximum over {len(comps)} connected components (degenerate top eigenvalue)")
    return best


def compute_bounds(
    g: Graph,
    k: int,
    methods=METHODS,
    spectrum: Spectrum | None = None,
) -> list[BoundReport]:
    """Run the selected methods, reporting applicability instead of skipping."""
    spec = spectrum if spectrum is not None else eigendecompose(g)
    out = []
    for method in methods:
        if method == INERTIAL1:
            out.append(inertial1_bound(g, k, spec))
        elif method == INERTIAL2:
            out.append(inertial2_bound(g, k, spec))
        elif method == RATIO:
            out.append(ratio_bound(g, k, spec))
        elif method == INERTIA_K1:
            if k == 1:
                out.append(inertia_k1_bound(g, spec))
            else:
                out.append(_inapplicable(INERTIA_K1, k, ["inertia ratio bound is defined at k = 1"]))
        else:
            raise ValueError(f"unknown method {method!r}")
    return out


def certify(
    g: Graph,
    k: int,
    budget: int = DEFAULT_BUDGET,
    methods=METHODS,
    spectrum: Spectrum | None = None,
) -> Certificate:
    """Sandwich certification: best lower bound vs exact chromatic number
    of the k-th power graph; equality pins the quantum value."""
    reports = compute_bounds(g, k, methods, spectrum=spectrum)
    pg = power_graph(g, k)
    result = chromatic_number_exact(pg, budget=budget)
    notes: list[str] = []
    if result.timed_out:
        notes.append(
            f"exact solver exhausted its {budget} node budget; chromatic value is an upper bound only"
        )
    applicable = [r for r in reports if r.applicable and r.integer_bound is not None]
    best = max(applicable, key=lambda r: r.integer_bound) if applicable else reports[0]
    certified = bool(applicable) and not result.timed_out and best.integer_bound == result.chi
    return Certificate(
        chi_k_exact=result.chi,
        best_bound=best,
        certified=certified,
        quantum_value=result.chi if certified else None,
        reports=reports,
        notes=notes,
    )
