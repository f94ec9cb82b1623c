"""Exception types shared by all modules."""


class PTOscillatorError(Exception):
    """Base class for every error raised by this package."""


class InvalidParameterError(PTOscillatorError, ValueError):
    """A physical parameter or option violates its precondition."""


class DomainError(PTOscillatorError, ValueError):
    """Input lies outside the mathematical domain of an operation,
    e.g. a coordinate beyond the walls or parameters outside an
    expansion's validity region."""


class QuadratureError(PTOscillatorError, RuntimeError):
    """Numerical integration could not reach the requested tolerance."""


class BracketingError(PTOscillatorError, RuntimeError):
    """A root finder was handed an interval that does not bracket a root."""


class ConvergenceError(PTOscillatorError, RuntimeError):
    """An iterative eigenvalue computation failed to converge."""


class ResourceLimitError(PTOscillatorError, RuntimeError):
    """A requested grid exceeds the configured maximum size."""
