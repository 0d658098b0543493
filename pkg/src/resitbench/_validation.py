"""Input validation helpers used by the public estimator surfaces."""

import numpy as np


def as_float_vector(v, name: str = "x") -> np.ndarray:
    """Coerce to a finite float64 1-d array; accepts (n,) or a single column."""
    arr = np.asarray(v, dtype=np.float64)
    if arr.ndim == 2 and arr.shape[1] == 1:
        arr = arr[:, 0]
    if arr.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite entries")
    return arr


def check_paired(a: np.ndarray, b: np.ndarray, min_length: int = 1) -> None:
    if a.shape[0] != b.shape[0]:
        raise ValueError(f"paired inputs differ in length: {a.shape[0]} vs {b.shape[0]}")
    if a.shape[0] < min_length:
        raise ValueError(f"need at least {min_length} paired samples, got {a.shape[0]}")


def check_min_length(v: np.ndarray, min_length: int, name: str = "input") -> None:
    if v.shape[0] < min_length:
        raise ValueError(f"{name} needs at least {min_length} samples, got {v.shape[0]}")
