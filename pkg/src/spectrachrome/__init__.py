"""Certified eigenvalue lower bounds for distance-k chromatic numbers.

Pipeline: build or parse a graph, take its adjacency spectrum, optimize
degree-k polynomials through small LPs and binary enumerations to get
lower bounds, compare against the exact chromatic number of the k-th
power graph, and (on equality) certify the quantum variant of the
parameter.  A separate projector module numerically verifies quantum
distance colorings and their pinching identities.
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from .bounds import (
    INERTIA_K1,
    INERTIAL1,
    INERTIAL2,
    METHODS,
    RATIO,
    BoundReport,
    Certificate,
    certify,
    compute_bounds,
    inertia_k1_bound,
    inertial1_bound,
    inertial2_bound,
    ratio_bound,
)
from .exact import (
    ColoringResult,
    IndependenceResult,
    chromatic_number_exact,
    independence_number_exact,
)
from .graphs import (
    UNREACHABLE,
    DistanceMatrix,
    Graph,
    connected_components,
    distances,
    encode_graph6,
    generate,
    induced_subgraph,
    is_k_partially_walk_regular,
    parse_edge_list,
    parse_graph6,
    power_graph,
)
from .optimize import (
    LinearProgram,
    LpSolution,
    LpStatus,
    Sign,
    feasible_poly_for_pattern,
    milp_min_weighted_binaries,
    solve_lp,
)
from .quantum import (
    PinchingFamily,
    QuantumColoring,
    Verdict,
    build_pinching,
    lift_classical,
    pinch,
    pinch_annihilation_residual,
    pinch_diagonal_fix_residual,
    pinching_to_coloring,
    pinching_unitary_identity,
    psd_split,
    verify_quantum_coloring,
)
from .spectral import (
    Inertia,
    Poly,
    PolyStats,
    Spectrum,
    eigendecompose,
    eval_poly_matrix,
    eval_poly_scalar,
    inertia,
)

__version__ = "0.1.0"
