"""Differential entropy estimators (nats) for one-dimensional samples.

knn_entropy is the Kozachenko-Leonenko nearest-neighbor estimator,
maxent_entropy is Hyvarinen's maximum-entropy approximation (1998), and
vasicek_entropy is Vasicek's m-spacing estimator (1976). Inputs are
sorted internally, which makes every estimate exactly permutation
invariant.
"""

import warnings

import numpy as np
from numba import njit, prange
from scipy.spatial import cKDTree
from scipy.special import digamma

from ._validation import as_float_vector
from .exceptions import EstimatorError

NEIGHBOR_ALGOS = ("brute", "kdtree")

# Distances/spacings below this are collapsed duplicates; clamping keeps
# the log finite and a warning reports how many values were touched.
_LOG_FLOOR = 1e-300

_GAUSSIAN_ENTROPY = 0.5 * np.log(2.0 * np.pi * np.e)
_K1 = 36.0 / (8.0 * np.sqrt(3.0) - 9.0)
_MAXENT_VARIANTS = {
    # G2, its expectation under a standard normal, and k2.
    1: (lambda z: np.abs(z), np.sqrt(2.0 / np.pi), 1.0 / (2.0 - 6.0 / np.pi)),
    2: (lambda z: np.exp(-0.5 * z * z), np.sqrt(0.5), 24.0 / (16.0 * np.sqrt(3.0) - 27.0)),
}


@njit(parallel=True, cache=True)
def _kth_nn_brute(y, k):
    n = y.shape[0]
    out = np.empty(n)
    for t in prange(n):
        best = np.full(k, np.inf)
        yt = y[t]
        for j in range(n):
            if j == t:
                continue
            d = abs(yt - y[j])
            if d < best[k - 1]:
                p = k - 1
                while p > 0 and best[p - 1] > d:
                    best[p] = best[p - 1]
                    p -= 1
                best[p] = d
        out[t] = best[k - 1]
    return out


def _kth_nn_kdtree(y: np.ndarray, k: int) -> np.ndarray:
    tree = cKDTree(y[:, None])
    # k+1 because the query point itself comes back at distance zero.
    return tree.query(y[:, None], k=k + 1)[0][:, k]


def _clamped_log(values: np.ndarray, what: str) -> np.ndarray:
    n_clamped = int(np.count_nonzero(values < _LOG_FLOOR))
    if n_clamped:
        warnings.warn(
            f"{n_clamped} zero {what} clamped to {_LOG_FLOOR:g} before log",
            RuntimeWarning,
            stacklevel=3,
        )
        values = np.maximum(values, _LOG_FLOOR)
    return np.log(values)


def knn_entropy(y, k: int = 3, neighbor_algo: str = "brute") -> float:
    """Nearest-neighbor entropy estimate from k-th neighbor distances.

    Both neighbor algorithms compute exact k-th neighbor distances; they
    exist so the tree-based path can be cross-checked against the scan.
    """
    y = np.sort(as_float_vector(y, "y"))
    n = y.shape[0]
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    if n <= k + 1:
        raise ValueError(f"need more than k+1={k + 1} samples, got {n}")
    if neighbor_algo not in NEIGHBOR_ALGOS:
        raise ValueError(f"unknown neighbor_algo {neighbor_algo!r}")
    if y[0] == y[-1]:
        raise EstimatorError("constant input: all neighbor distances are zero")
    if neighbor_algo == "brute":
        rho = _kth_nn_brute(y, k)
    else:
        rho = _kth_nn_kdtree(y, k)
    # d=1: log(T-1) - psi(k) + log(volume of the unit interval ball = 2).
    return float(np.log(n - 1) - digamma(k) + np.log(2.0) + np.mean(_clamped_log(rho, "neighbor distances")))


def knn_entropy_equivalence(y, k: int = 3, tol: float = 1e-10) -> bool:
    """True when the brute-force and kd-tree paths agree within tol."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        brute = knn_entropy(y, k=k, neighbor_algo="brute")
        tree = knn_entropy(y, k=k, neighbor_algo="kdtree")
    return abs(brute - tree) <= tol


def maxent_entropy(y, variant: int = 1, centered: bool = False) -> float:
    """Maximum-entropy approximation: the Gaussian entropy at the sample's
    root-mean-square scale minus a non-negative non-Gaussianity correction.

    The scale uses sum(y**2)/(T-1) without mean subtraction; ``centered``
    switches mean removal on for callers that want it.
    """
    y = np.sort(as_float_vector(y, "y"))
    n = y.shape[0]
    if n < 3:
        raise ValueError(f"need at least 3 samples, got {n}")
    if variant not in _MAXENT_VARIANTS:
        raise ValueError(f"variant must be 1 or 2, got {variant}")
    if centered:
        y = y - y.mean()
    sigma = np.sqrt(np.sum(y * y) / (n - 1))
    if sigma == 0.0:
        raise EstimatorError("all-zero input: scale is undefined")
    z = y / sigma
    g2, g2_gauss, k2 = _MAXENT_VARIANTS[variant]
    mean_g1 = np.mean(z * np.exp(-0.5 * z * z))
    mean_g2 = np.mean(g2(z))
    correction = _K1 * mean_g1 ** 2 + k2 * (mean_g2 - g2_gauss) ** 2
    return float(_GAUSSIAN_ENTROPY - correction + np.log(sigma))


def vasicek_entropy(y) -> float:
    """Vasicek m-spacing entropy with m = floor(sqrt(T)) and clamped
    order statistics at the boundary."""
    y = np.sort(as_float_vector(y, "y"))
    n = y.shape[0]
    if n < 4:
        raise ValueError(f"need at least 4 samples, got {n}")
    m = int(np.floor(np.sqrt(n)))
    idx = np.arange(n)
    upper = y[np.minimum(idx + m, n - 1)]
    lower = y[np.maximum(idx - m, 0)]
    spacings = (n / (2.0 * m)) * (upper - lower)
    return float(np.mean(_clamped_log(spacings, "spacings")))
