"""Brute-force reference implementations used only by the tests.

Everything here trades speed for obviousness: plain loops, no matrix
identities, no shared code with the package paths they check.
"""

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class OracleReport:
    name: str
    main_value: float
    oracle_value: float

    @property
    def abs_diff(self) -> float:
        return abs(self.main_value - self.oracle_value)

    @property
    def rel_diff(self) -> float:
        denom = max(abs(self.main_value), abs(self.oracle_value), 1e-300)
        return self.abs_diff / denom


def _median(values):
    values = sorted(values)
    n = len(values)
    mid = n // 2
    if n % 2 == 1:
        return values[mid]
    return 0.5 * (values[mid - 1] + values[mid])


def _loop_bandwidth(v):
    dists = []
    for i in range(len(v)):
        for j in range(i + 1, len(v)):
            d = abs(v[i] - v[j])
            if d > 0:
                dists.append(d)
    return _median(dists)


def oracle_hsic(a, b) -> float:
    """Four-term double-sum expansion of the biased HSIC statistic."""
    a = [float(v) for v in a]
    b = [float(v) for v in b]
    n = len(a)
    sa = _loop_bandwidth(a)
    sb = _loop_bandwidth(b)

    def k(u, v, s):
        return math.exp(-((u - v) ** 2) / (2.0 * s * s))

    term_kl = 0.0
    sum_k = 0.0
    sum_l = 0.0
    row_k = [0.0] * n
    row_l = [0.0] * n
    for i in range(n):
        for j in range(n):
            kij = k(a[i], a[j], sa)
            lij = k(b[i], b[j], sb)
            term_kl += kij * lij
            sum_k += kij
            sum_l += lij
            row_k[i] += kij
            row_l[i] += lij
    cross = sum(row_k[i] * row_l[i] for i in range(n))
    return term_kl / n ** 2 + sum_k * sum_l / n ** 4 - 2.0 * cross / n ** 3


def oracle_distance_covariance(a, b) -> float:
    """Double-centered pairwise distances, averaged entrywise, square-rooted."""
    a = [float(v) for v in a]
    b = [float(v) for v in b]
    n = len(a)

    def centered(v):
        d = [[abs(v[i] - v[j]) for j in range(n)] for i in range(n)]
        row = [sum(d[i]) / n for i in range(n)]
        col = [sum(d[i][j] for i in range(n)) / n for j in range(n)]
        total = sum(row) / n
        return [[d[i][j] - row[i] - col[j] + total for j in range(n)] for i in range(n)]

    ca = centered(a)
    cb = centered(b)
    mean = sum(ca[i][j] * cb[i][j] for i in range(n) for j in range(n)) / n ** 2
    return math.sqrt(max(mean, 0.0))


def oracle_distance_correlation(a, b) -> float:
    denom = oracle_distance_covariance(a, a) * oracle_distance_covariance(b, b)
    if denom <= 0:
        return 0.0
    return oracle_distance_covariance(a, b) / math.sqrt(denom)


def _average_ranks(v):
    ranks = []
    for vi in v:
        less = sum(1 for vj in v if vj < vi)
        equal = sum(1 for vj in v if vj == vi)
        ranks.append(less + (equal + 1) / 2.0)
    return ranks


def oracle_hoeffding_phi(a, b) -> float:
    """Exact integral of (C_n(u,v) - uv)^2 over the cells induced by the
    pseudo-observations, then the same sqrt(90 * integral) normalization.

    The empirical copula is a step function, constant on each cell of the
    break grid; cumulative counts over the breaks give its cell values and
    the integrand is a polynomial integrated in closed form per cell.
    """
    n = len(a)
    u_obs = [r / n for r in _average_ranks(a)]
    v_obs = [r / n for r in _average_ranks(b)]
    u_breaks = sorted(set([0.0, 1.0] + u_obs))
    v_breaks = sorted(set([0.0, 1.0] + v_obs))
    u_pos = {value: idx for idx, value in enumerate(u_breaks)}
    v_pos = {value: idx for idx, value in enumerate(v_breaks)}

    # counts[p][q] = number of observations at exactly (u_breaks[p], v_breaks[q])
    counts = [[0] * len(v_breaks) for _ in u_breaks]
    for t in range(n):
        counts[u_pos[u_obs[t]]][v_pos[v_obs[t]]] += 1
    # cumulative[p][q] = number of observations with U <= u_breaks[p], V <= v_breaks[q]
    cumulative = [row[:] for row in counts]
    for p in range(len(u_breaks)):
        for q in range(len(v_breaks)):
            if p > 0:
                cumulative[p][q] += cumulative[p - 1][q]
            if q > 0:
                cumulative[p][q] += cumulative[p][q - 1]
            if p > 0 and q > 0:
                cumulative[p][q] -= cumulative[p - 1][q - 1]

    total = 0.0
    for p in range(len(u_breaks) - 1):
        u0, u1 = u_breaks[p], u_breaks[p + 1]
        for q in range(len(v_breaks) - 1):
            v0, v1 = v_breaks[q], v_breaks[q + 1]
            # on the open cell above (u0, v0) the copula counts points with
            # U <= u0 and V <= v0
            c = cumulative[p][q] / n
            # integral of (c - uv)^2 over the cell, term by term
            area = (u1 - u0) * (v1 - v0)
            iu1 = (u1 ** 2 - u0 ** 2) / 2.0
            iv1 = (v1 ** 2 - v0 ** 2) / 2.0
            iu2 = (u1 ** 3 - u0 ** 3) / 3.0
            iv2 = (v1 ** 3 - v0 ** 3) / 3.0
            total += c * c * area - 2.0 * c * iu1 * iv1 + iu2 * iv2
    return math.sqrt(max(90.0 * total, 0.0))


def oracle_knn_distances(y, k: int):
    """Exact k-th nearest neighbor distances by per-point exhaustive sort."""
    y = [float(v) for v in y]
    out = []
    for t, yt in enumerate(y):
        dists = sorted(abs(yt - y[j]) for j in range(len(y)) if j != t)
        out.append(dists[k - 1])
    return np.array(out)


def oracle_entropy_analytic(dist: str, scale: float) -> float:
    """Closed-form differential entropies (nats) of the three families."""
    if dist == "normal":
        return 0.5 * math.log(2.0 * math.pi * math.e * scale * scale)
    if dist == "uniform":
        return math.log(2.0 * scale)
    if dist == "laplace":
        return 1.0 + math.log(2.0 * scale)
    raise ValueError(f"unknown distribution {dist!r}")


def oracle_laplace_variance(scale: float, n_grid: int = 1_000_000) -> float:
    """Variance of laplace(0, scale) via midpoint quadrature of the quantile
    function: Var = integral of Q(u)^2 du over (0, 1) (the mean is zero)."""
    u = (np.arange(n_grid) + 0.5) / n_grid
    q = -scale * np.sign(u - 0.5) * np.log1p(-2.0 * np.abs(u - 0.5))
    return float(np.mean(q * q))
