"""Exception types shared across the package."""


class WavepackError(Exception):
    """Base class for all library errors."""


class DomainError(WavepackError):
    """An argument lies outside the mathematical domain of the operation."""


class CapacityError(WavepackError):
    """A size/order cap was exceeded (recurrence stability or overflow guard)."""


class UnsupportedMethodError(WavepackError):
    """The requested evaluation method is not available for this input."""


class NonConvergenceError(WavepackError):
    """A numerical procedure failed to converge within its budget."""
