"""Exception types shared across the package."""


class EstimatorError(ValueError):
    """A score estimator cannot be evaluated on the given input."""


class RegressionError(ValueError):
    """Least-squares fit is impossible (degenerate regressor)."""


class DirectionError(RuntimeError):
    """A direction decision failed; ``direction`` names the failing leg."""

    def __init__(self, direction: str, cause: Exception):
        self.direction = direction
        self.cause = cause
        super().__init__(f"scoring failed for direction {direction}: {cause}")
