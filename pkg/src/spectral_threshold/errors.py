"""Exception types shared across the package.

Two families: domain errors for inputs outside the admissible parameter
region, and numerics errors for computations that fail to converge.  The
CLI maps these to distinct exit codes; the service maps them to 422/500.
"""


class ThresholdError(Exception):
    """Base class for all package errors."""


class DomainError(ThresholdError, ValueError):
    """Input outside the admissible parameter region."""


class NumericsError(ThresholdError, RuntimeError):
    """A numerical procedure failed to reach its target accuracy."""


class QuadratureError(NumericsError):
    """Adaptive quadrature ran out of subdivision budget.

    Carries the best value obtained and the achieved error estimate.
    """

    def __init__(self, message: str, value: complex, error_estimate: float):
        super().__init__(message)
        self.value = value
        self.error_estimate = error_estimate


class ContinuityError(NumericsError):
    """Branch tracking could not keep phase steps below the continuity bound."""


class SingularityError(NumericsError):
    """A path passes through the turning point away from its endpoints."""


class BracketError(NumericsError):
    """Root bracketing failed: no sign change inside the maximal interval."""


class ResolutionError(NumericsError):
    """Eigenvalue grid too coarse for the requested number of levels."""
