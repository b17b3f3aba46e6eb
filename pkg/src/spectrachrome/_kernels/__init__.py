"""Kernel backend selection.

The compiled extension is preferred when present; the numpy fallback is
used otherwise.  Set SPECTRACHROME_KERNELS=python (or =cython) to force a
backend; forcing cython raises if the extension was not built.
"""

import os

_requested = os.environ.get("SPECTRACHROME_KERNELS", "auto")

if _requested not in ("auto", "python", "cython"):
    raise ValueError(f"SPECTRACHROME_KERNELS must be auto/python/cython, got {_requested!r}")

if _requested in ("auto", "cython"):
    try:
        from . import _fast as _impl

        BACKEND = "cython"
    except ImportError:
        if _requested == "cython":
            raise
        from . import _pure as _impl

        BACKEND = "python"
else:
    from . import _pure as _impl

    BACKEND = "python"

OPTIMAL = _impl.OPTIMAL
INFEASIBLE = _impl.INFEASIBLE
UNBOUNDED = _impl.UNBOUNDED
jacobi_eigh = _impl.jacobi_eigh
simplex = _impl.simplex

__all__ = ["BACKEND", "OPTIMAL", "INFEASIBLE", "UNBOUNDED", "jacobi_eigh", "simplex"]
