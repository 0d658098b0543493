"""Ordinary least squares on a transformed regressor.

The cubic structural model is linear in the transformed coordinate
x**3, so a plain affine fit after the coordinate map covers both model
families.
"""

from dataclasses import dataclass

import numpy as np

from ._validation import as_float_vector, check_paired
from .exceptions import RegressionError


def _identity(v: np.ndarray) -> np.ndarray:
    return v


def _cube(v: np.ndarray) -> np.ndarray:
    return v ** 3


TRANSFORMS = {
    "identity": _identity,
    "cube": _cube,
    "signed_cbrt": np.cbrt,
}


def apply_transform(name: str, v: np.ndarray) -> np.ndarray:
    try:
        return TRANSFORMS[name](v)
    except KeyError:
        raise ValueError(f"unknown transform {name!r}; expected one of {sorted(TRANSFORMS)}") from None


@dataclass(frozen=True)
class RegressionModel:
    """Affine model in the transformed regressor: predict(x) = slope * t(x) + intercept."""

    transform: str
    slope: float
    intercept: float

    def predict(self, x) -> np.ndarray:
        t = apply_transform(self.transform, as_float_vector(x, "x"))
        return self.slope * t + self.intercept

    def residuals(self, x, y) -> np.ndarray:
        """Prediction minus observation."""
        y = as_float_vector(y, "y")
        pred = self.predict(x)
        check_paired(pred, y)
        return pred - y


def fit_regression(x, y, transform: str = "identity") -> RegressionModel:
    """Least-squares fit of y on t(x). Raises RegressionError when t(x) is constant."""
    x = as_float_vector(x, "x")
    y = as_float_vector(y, "y")
    check_paired(x, y, min_length=3)
    t = apply_transform(transform, x)
    t_mean = t.mean()
    t_var = np.mean((t - t_mean) ** 2)
    if np.ptp(t) == 0.0 or t_var == 0.0:
        raise RegressionError(f"regressor is constant after {transform!r} transform")
    y_mean = y.mean()
    slope = float(np.mean((t - t_mean) * (y - y_mean)) / t_var)
    intercept = float(y_mean - slope * t_mean)
    return RegressionModel(transform=transform, slope=slope, intercept=intercept)
