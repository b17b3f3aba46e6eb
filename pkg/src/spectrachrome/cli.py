"""Command line interface.

Subcommands: spectrum, bound, certify, verify-qc, batch.  JSON output is
the stable machine interface; identical invocations produce byte
identical output.  Exit codes: 0 success, 1 input error, 2 resource or
budget limit, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import optimize
from .bounds import METHODS, compute_bounds, certify
from .errors import (
    FamilyParamError,
    GraphFormatError,
    NumericalError,
    ResourceLimitError,
    SpectraChromeError,
    StructureError,
)
from .exact import DEFAULT_BUDGET
from .graphs import Graph, generate, parse_edge_list, parse_graph6
from .quantum import QuantumColoring, verify_quantum_coloring
from .spectral import DEFAULT_EIG_TOL, eigendecompose

METHOD_FLAGS = {
    "inertial1": "INERTIAL1",
    "inertial2": "INERTIAL2",
    "ratio": "RATIO",
    "inertia1q": "INERTIA_K1",
}


def parse_family_spec(spec: str) -> Graph:
    """`name:p1,p2` family syntax; `petersen` is generalized_petersen:5,2."""
    name, _, rest = spec.partition(":")
    name = name.strip().lower()
    if name == "petersen" and not rest:
        return generate("generalized_petersen", (5, 2))
    try:
        params = tuple(int(x) for x in rest.split(",")) if rest else ()
    except ValueError:
        raise FamilyParamError(f"non-integer parameter in family spec {spec!r}") from None
    return generate(name, params)


def load_graph_file(path: str) -> Graph:
    """Graph from a file: edge list when a line looks like `u v`, else graph6."""
    with open(path, "r", encoding="ascii") as fh:
        text = fh.read()
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) == 2 and all(p.lstrip("-").isdigit() for p in parts):
            return parse_edge_list(text)
        break
    return parse_graph6(text)


def _graph_from_args(args) -> Graph:
    if getattr(args, "family", None):
        return parse_family_spec(args.family)
    if getattr(args, "input", None):
        return load_graph_file(args.input)
    raise GraphFormatError("one of --family or --input is required")


def _emit(obj, fmt: str, table_lines) -> None:
    if fmt == "json":
        print(json.dumps(obj))
    else:
        for line in table_lines:
            print(line)


def cmd_spectrum(args) -> int:
    g = _graph_from_args(args)
    spec = eigendecompose(g, rel_tol=args.eig_tol)
    payload = {"graph": g.name, "n": g.n, **spec.to_json_dict()}
    rows = [f"{'eigenvalue':>14}  multiplicity"]
    for lam, m in zip(payload["distinct"], payload["mult"]):
        rows.append(f"{lam:>14.10g}  {m}")
    _emit(payload, args.format, rows)
    return 0


def _selected_methods(flag: str) -> tuple[str, ...]:
    if flag == "all":
        return METHODS
    return (METHOD_FLAGS[flag],)


def cmd_bound(args) -> int:
    g = _graph_from_args(args)
    spec = eigendecompose(g, rel_tol=args.eig_tol)
    reports = compute_bounds(g, args.k, _selected_methods(args.method), spectrum=spec)
    payload = [r.to_json_dict(g.name, g.n) for r in reports]
    rows = [f"{'method':<12} {'applicable':<10} {'raw':>12} {'integer':>8}  notes"]
    for r in payload:
        raw = "-" if r["raw_value"] is None else f"{r['raw_value']:.6f}"
        ib = "-" if r["integer_bound"] is None else str(r["integer_bound"])
        rows.append(f"{r['method']:<12} {str(r['applicable']):<10} {raw:>12} {ib:>8}  {'; '.join(r['notes'])}")
    _emit(payload, args.format, rows)
    return 0


def cmd_certify(args) -> int:
    g = _graph_from_args(args)
    spec = eigendecompose(g, rel_tol=args.eig_tol)
    cert = certify(g, args.k, budget=args.budget, spectrum=spec)
    payload = cert.to_json_dict(g.name, g.n)
    rows = [
        f"graph {g.name or '<unnamed>'} (n={g.n}), k={args.k}",
        f"exact chromatic number of the power graph: {cert.chi_k_exact}",
        f"best lower bound: {cert.best_bound.integer_bound} ({cert.best_bound.method})",
        f"certified: {cert.certified}"
        + (f", quantum value = {cert.quantum_value}" if cert.certified else ""),
    ]
    _emit(payload, args.format, rows)
    return 0


def cmd_verify_qc(args) -> int:
    g = _graph_from_args(args)
    with open(args.projectors, "r", encoding="ascii") as fh:
        qc = QuantumColoring.from_json(fh.read())
    verdict = verify_quantum_coloring(qc, g, args.k, tol=args.qtol)
    payload = verdict.to_json_dict()
    rows = [
        f"pass: {verdict.passed}",
        f"max residual: {verdict.max_residual:.3e}",
    ] + [f"violation: {v}" for v in verdict.violations]
    _emit(payload, args.format, rows)
    return 0


def cmd_batch(args) -> int:
    with open(args.input, "r", encoding="ascii") as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]

    def row(index_line) -> dict:
        index, line = index_line
        try:
            g = parse_graph6(line)
            cert = certify(g, args.k, budget=args.budget)
            return {"line": index + 1, "graph6": line, **cert.to_json_dict(g.name, g.n)}
        except SpectraChromeError as exc:
            return {"line": index + 1, "graph6": line, "error": str(exc)}

    try:
        workers = int(os.environ.get("SPECTRACHROME_THREADS", "0"))
    except ValueError:
        workers = 0
    workers = workers if workers > 0 else min(4, max(1, len(lines)))
    if lines:
        # map() preserves input order regardless of completion order
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(row, enumerate(lines)))
    else:
        results = []
    print(json.dumps(results))
    return 1 if any("error" in r for r in results) else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spectrachrome",
        description="Eigenvalue lower bounds and certification for distance-k chromatic numbers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_k=True):
        p.add_argument("--family", help="family spec, e.g. cycle:6, generalized_petersen:8,3")
        p.add_argument("--input", help="graph file (graph6 line or edge list)")
        if with_k:
            p.add_argument("--k", type=int, default=1, help="distance (default 1)")
        p.add_argument("--format", choices=["json", "table"], default="json")
        p.add_argument("--eig-tol", type=float, default=DEFAULT_EIG_TOL, dest="eig_tol")
        p.add_argument("--lp-tol", type=float, default=None, dest="lp_tol")
        p.add_argument("--qtol", type=float, default=1e-10)
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search node budget")

    p_spec = sub.add_parser("spectrum", help="distinct eigenvalues with multiplicities")
    add_common(p_spec, with_k=False)
    p_spec.set_defaults(func=cmd_spectrum)

    p_bound = sub.add_parser("bound", help="run bound methods for a given k")
    add_common(p_bound)
    p_bound.add_argument(
        "--method", choices=[*METHOD_FLAGS, "all"], default="all", help="bound method"
    )
    p_bound.set_defaults(func=cmd_bound)

    p_cert = sub.add_parser("certify", help="sandwich certification against exact chi_k")
    add_common(p_cert)
    p_cert.set_defaults(func=cmd_certify)

    p_ver = sub.add_parser("verify-qc", help="verify a projector coloring file")
    add_common(p_ver)
    p_ver.add_argument("--projectors", required=True, help="projector JSON file")
    p_ver.set_defaults(func=cmd_verify_qc)

    p_batch = sub.add_parser("batch", help="certify every graph6 line of a file")
    add_common(p_batch)
    p_batch.set_defaults(func=cmd_batch)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; 2 is reserved for resource limits
        return 0 if exc.code == 0 else 1
    if getattr(args, "k", 1) < 1:
        print("error: --k must be >= 1", file=sys.stderr)
        return 1
    if getattr(args, "lp_tol", None):
        optimize.LP_FEAS_TOL = args.lp_tol
    try:
        return args.func(args)
    except (GraphFormatError, FamilyParamError, StructureError, FileNotFoundError, IsADirectoryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 2
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
