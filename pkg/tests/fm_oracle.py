"""Exact rational Fourier-Motzkin LP oracle used to cross-check the simplex.

Maximizes c.x over free variables subject to mixed-relation rows by
introducing t <= c.x, eliminating every x variable exactly over
Fractions, and reading the supremum of t off the surviving rows.
"""

from __future__ import annotations

from fractions import Fraction

INFEASIBLE = "INFEASIBLE"
UNBOUNDED = "UNBOUNDED"
OPTIMAL = "OPTIMAL"

_ROW_CAP = 200_000


def _normalize(row):
    coeffs, rhs = row
    for x in coeffs:
        if x != 0:
            scale = abs(x)
            return tuple(c / scale for c in coeffs), rhs / scale
    return tuple(coeffs), rhs


def fm_maximize(c, rows):
    """Returns (status, value) for max c.x s.t. rows (coeffs, rel, rhs).

    Variables are free.  Value is a Fraction when OPTIMAL.
    """
    nvars = len(c)
    system: list[tuple[list[Fraction], Fraction]] = []  # coeffs . y <= rhs over y = (x, t)
    for coeffs, rel, rhs in rows:
        fc = [Fraction(v) for v in coeffs] + [Fraction(0)]
        fr = Fraction(rhs)
        if rel in ("<=", "="):
            system.append((list(fc), fr))
        if rel in (">=", "="):
            system.append(([-v for v in fc], -fr))
    # t - c.x <= 0
    system.append(([-Fraction(v) for v in c] + [Fraction(1)], Fraction(0)))

    for var in range(nvars):
        pos, neg, rest = [], [], []
        for coeffs, rhs in system:
            a = coeffs[var]
            if a > 0:
                pos.append((coeffs, rhs))
            elif a < 0:
                neg.append((coeffs, rhs))
            else:
                rest.append((coeffs, rhs))
        new = {}
        for coeffs, rhs in rest:
            key = _normalize((coeffs, rhs))
            kept = new.get(key[0])
            if kept is None or key[1] < kept:
                new[key[0]] = key[1]
        for pc, pr in pos:
            for ncf, nr in neg:
                ap, an = pc[var], -ncf[var]
                combo = [an * a + ap * b for a, b in zip(pc, ncf)]
                rhsc = an * pr + ap * nr
                key, val = _normalize((combo, rhsc))
                kept = new.get(key)
                if kept is None or val < kept:
                    new[key] = val
        system = [(list(k), v) for k, v in new.items()]
        if len(system) > _ROW_CAP:
            raise RuntimeError("Fourier-Motzkin row blow-up")
        # constant rows decide feasibility immediately
        for coeffs, rhs in system:
            if all(x == 0 for x in coeffs) and rhs < 0:
                return INFEASIBLE, None

    upper = None
    for coeffs, rhs in system:
        a = coeffs[nvars]
        if a == 0:
            if rhs < 0:
                return INFEASIBLE, None
        elif a > 0:
            bound = rhs / a
            if upper is None or bound < upper:
                upper = bound
        # a < 0 rows lower-bound t and cannot cut the supremum
    if upper is None:
        return UNBOUNDED, None
    return OPTIMAL, upper
