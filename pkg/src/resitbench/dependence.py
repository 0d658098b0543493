"""Independence-test statistics between two paired samples.

All six scores are symmetric in their arguments, non-negative, and used
only for ordering (no p-values). HSIC follows Gretton et al. (2005),
the incomplete-Cholesky variant follows Bach & Jordan (2002), distance
covariance/correlation follow Szekely, Rizzo & Bakirov (2007), and the
copula statistic follows Gaisser, Ruppert & Schmid (2010).
"""

from dataclasses import dataclass

import numpy as np
from scipy.stats import rankdata

from ._validation import as_float_vector, check_paired
from .exceptions import EstimatorError

# Normalization h2(d) for the bivariate copula statistic; puts the
# comonotone case at 1.
_HOEFFDING_H2 = 90.0


def median_bandwidth(v: np.ndarray) -> float:
    """Median of the nonzero pairwise distances (the median heuristic)."""
    d = np.abs(v[:, None] - v[None, :])
    upper = d[np.triu_indices(v.shape[0], k=1)]
    positive = upper[upper > 0]
    if positive.size == 0:
        raise EstimatorError("constant input: kernel bandwidth is undefined")
    return float(np.median(positive))


@dataclass(frozen=True, eq=False)
class GramMatrix:
    """RBF kernel matrix with the bandwidth it was built from."""

    entries: np.ndarray
    bandwidth: float


def rbf_gram(v: np.ndarray, bandwidth: float | None = None) -> GramMatrix:
    if bandwidth is None:
        bandwidth = median_bandwidth(v)
    d = v[:, None] - v[None, :]
    entries = np.exp(-(d * d) / (2.0 * bandwidth * bandwidth))
    return GramMatrix(entries=entries, bandwidth=bandwidth)


def _double_center(m: np.ndarray) -> np.ndarray:
    return m - m.mean(axis=0) - m.mean(axis=1)[:, None] + m.mean()


def hsic(a, b) -> float:
    """Biased HSIC statistic trace(KHLH) / n**2 with median-heuristic RBF kernels."""
    a = as_float_vector(a, "a")
    b = as_float_vector(b, "b")
    check_paired(a, b, min_length=4)
    n = a.shape[0]
    kc = _double_center(rbf_gram(a).entries)
    lc = _double_center(rbf_gram(b).entries)
    return float((kc * lc).sum() / (n * n))


def incomplete_cholesky_rbf(v: np.ndarray, bandwidth: float, eta: float) -> np.ndarray:
    """Pivoted low-rank factor G with K approx G @ G.T for the RBF Gram matrix of v.

    Pivots on the largest residual diagonal entry and stops once the
    residual trace falls below eta. Never forms the full kernel matrix.
    """
    if not eta > 0:
        raise ValueError(f"eta must be positive, got {eta}")
    n = v.shape[0]
    inv_two_bw2 = 1.0 / (2.0 * bandwidth * bandwidth)
    diag = np.ones(n)  # RBF kernels have unit diagonal
    cols = []
    while diag.sum() > eta and len(cols) < n:
        j = int(np.argmax(diag))
        pivot = diag[j]
        if pivot <= 0:
            break
        d = v - v[j]
        col = np.exp(-(d * d) * inv_two_bw2)
        for g in cols:
            col -= g * g[j]
        col /= np.sqrt(pivot)
        cols.append(col)
        diag = np.maximum(diag - col * col, 0.0)
    return np.column_stack(cols) if cols else np.zeros((n, 1))


def hsic_incomplete_cholesky(a, b, eta: float) -> float:
    """HSIC computed from incomplete-Cholesky factors of both Gram matrices.

    Converges to hsic() as eta shrinks; equal to it (up to rounding) when
    the pivoting runs to full rank.
    """
    a = as_float_vector(a, "a")
    b = as_float_vector(b, "b")
    check_paired(a, b, min_length=4)
    n = a.shape[0]
    ga = incomplete_cholesky_rbf(a, median_bandwidth(a), eta)
    gb = incomplete_cholesky_rbf(b, median_bandwidth(b), eta)
    ga = ga - ga.mean(axis=0)
    gb = gb - gb.mean(axis=0)
    m = ga.T @ gb
    return float((m * m).sum() / (n * n))


def _centered_distances(v: np.ndarray) -> np.ndarray:
    return _double_center(np.abs(v[:, None] - v[None, :]))


def dist_cov(a, b) -> float:
    """Sample distance covariance (on the norm scale, not squared)."""
    a = as_float_vector(a, "a")
    b = as_float_vector(b, "b")
    check_paired(a, b, min_length=2)
    sq = (_centered_distances(a) * _centered_distances(b)).mean()
    return float(np.sqrt(max(sq, 0.0)))


def dist_var(a) -> float:
    return dist_cov(a, a)


def dist_corr(a, b) -> float:
    """Distance correlation in [0, 1]; zero when either marginal distance variance vanishes."""
    a = as_float_vector(a, "a")
    b = as_float_vector(b, "b")
    check_paired(a, b, min_length=2)
    denom = dist_var(a) * dist_var(b)
    if denom <= 0.0:
        return 0.0
    return float(dist_cov(a, b) / np.sqrt(denom))


def hoeffding_phi(a, b) -> float:
    """Normalized L2 distance between the empirical copula and the product copula.

    Uses the rank-based closed form of the integral (average ranks on
    ties): with pseudo-observations U, V the three terms below are the
    exact integrals of C**2, C*Pi and Pi**2 over the unit square.
    """
    a = as_float_vector(a, "a")
    b = as_float_vector(b, "b")
    check_paired(a, b, min_length=2)
    n = a.shape[0]
    u = rankdata(a) / n
    v = rankdata(b) / n
    term_cc = np.mean((1.0 - np.maximum.outer(u, u)) * (1.0 - np.maximum.outer(v, v)))
    term_cp = np.mean((1.0 - u * u) * (1.0 - v * v)) / 4.0
    term_pp = 1.0 / 9.0
    value = _HOEFFDING_H2 * (term_cc - 2.0 * term_cp + term_pp)
    return float(np.sqrt(max(value, 0.0)))
