"""Exception hierarchy shared across the toolkit.

Each class carries the process exit code the CLI maps it to.
"""


class BipstabError(Exception):
    """Base class for all toolkit errors."""

    exit_code = 1


class InvalidInputError(BipstabError):
    """Malformed or out-of-range user input (parameters, files, flags)."""

    exit_code = 2


class SizeLimitError(InvalidInputError):
    """Exhaustive enumeration requested beyond the supported size."""


class ConvergenceError(BipstabError):
    """Root iteration failed to reach the residual tolerance.

    Carries the best iterate so callers can inspect how far the solve got.
    """

    exit_code = 3

    def __init__(self, message, best_roots=None, best_residuals=None, iterations=None):
        super().__init__(message)
        self.best_roots = best_roots
        self.best_residuals = best_residuals
        self.iterations = iterations


class ContourError(BipstabError):
    """Numerical failure while sampling a contour."""

    exit_code = 3


class EvaluationError(ContourError):
    """A function value on the contour was not finite."""

    def __init__(self, message, location=None):
        super().__init__(message)
        self.location = location


class ZeroOnContourError(ContourError):
    """A sampled contour point is (numerically) a zero of the function."""

    def __init__(self, message, location=None):
        super().__init__(message)
        self.location = location


class RefinementDepthError(ContourError):
    """Adaptive contour refinement exceeded its depth budget."""


class InvariantViolationError(BipstabError):
    """A computed quantity contradicts a structural guarantee (numerics bug)."""

    exit_code = 3
