"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input is outside the mathematical domain of an operation."""


class UnsupportedGeometryError(DomainError):
    """The requested geometry violates a closed-form support condition."""


class ConvergenceError(RuntimeError):
    """Numerical quadrature did not reach the requested tolerance.

    Carries the best value obtained so far and its a-posteriori error
    estimate, so callers can still inspect the partial result.
    """

    def __init__(self, message: str, best_value: complex, error_estimate: float):
        super().__init__(message)
        self.best_value = best_value
        self.error_estimate = error_estimate


class ConfigError(ValueError):
    """A scenario/config document failed validation. ``field`` names the key."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field
