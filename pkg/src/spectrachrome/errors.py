"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: input problems -> 1, resource and
budget limits -> 2, numerical failures -> 3.
"""


class SpectraChromeError(Exception):
    """Base class for all package errors."""


class GraphFormatError(SpectraChromeError, ValueError):
    """Malformed graph input (graph6 stream, edge list, projector JSON)."""


class FamilyParamError(SpectraChromeError, ValueError):
    """Invalid parameters for a graph family generator."""


class StructureError(SpectraChromeError, ValueError):
    """Structurally inconsistent numerical input (dimensions, block layout)."""


class ResourceLimitError(SpectraChromeError, RuntimeError):
    """An enumeration cap or search budget was exceeded."""


class NumericalError(SpectraChromeError, RuntimeError):
    """A numerical routine failed to converge or broke down."""

    def __init__(self, message: str, residual: float | None = None):
        if residual is not None:
            message = f"{message} (residual {residual:.3e})"
        super().__init__(message)
        self.residual = residual


class VerificationError(SpectraChromeError, RuntimeError):
    """A quantity that is guaranteed by theory failed its numerical check."""
