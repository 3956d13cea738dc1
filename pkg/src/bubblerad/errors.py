"""Exception types shared across the package.

Plain ``ValueError`` is used for domain errors (bad arguments); the classes
here carry numerical diagnostics for failures that happen mid-computation.
"""

from __future__ import annotations


class NumericalDegeneracyError(RuntimeError):
    """Raised when a matching system is numerically degenerate.

    Carries the residual magnitude so callers can log or relax.
    """

    def __init__(self, message: str, residual: float = float("nan")):
        super().__init__(message)
        self.residual = residual


class TruncationError(RuntimeError):
    """Angular-momentum sum failed to certify convergence below its cap."""

    def __init__(self, message: str, *, l_cap: int, partial_sum: float,
                 last_terms: tuple[float, ...]):
        super().__init__(message)
        self.l_cap = l_cap
        self.partial_sum = partial_sum
        self.last_terms = last_terms


class QuadratureError(RuntimeError):
    """Adaptive quadrature did not reach the requested tolerance.

    ``worst_interval`` is ``(a, b, error_estimate)`` for the subinterval
    with the largest estimated error.
    """

    def __init__(self, message: str, *, result: float, abserr: float,
                 worst_interval: tuple[float, float, float] | None = None):
        super().__init__(message)
        self.result = result
        self.abserr = abserr
        self.worst_interval = worst_interval
