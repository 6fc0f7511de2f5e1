"""Exception types shared across the package."""


class HrSharpError(Exception):
    """Base class for all package errors."""


class ArgumentError(HrSharpError, ValueError):
    """An argument violates a documented precondition."""


class DomainError(HrSharpError, ValueError):
    """A value lies outside the mathematical domain of an operation."""


class ResolutionError(ArgumentError):
    """A discretized spectrum cannot deliver the requested number of modes."""


class DegenerateInputError(HrSharpError, ValueError):
    """Input collapses an expression that must stay nonzero (e.g. a zero denominator)."""


class InternalConsistencyError(HrSharpError, RuntimeError):
    """Two routes to the same quantity disagree beyond tolerance."""


class QuadratureError(HrSharpError, RuntimeError):
    """Adaptive quadrature hit its refinement limit before converging.

    Carries the best available estimate and the accumulated error bound.
    """

    def __init__(self, message, estimate, error_bound):
        super().__init__(message)
        self.estimate = estimate
        self.error_bound = error_bound
