"""Seedable synthetic data for the two structural models.

Cause and noise are drawn by inverse-CDF transforms over a counter-based
Philox stream, so every draw is reproducible bit-for-bit and scaling a
distribution is exact elementwise multiplication.
"""

from dataclasses import dataclass

import numpy as np
from scipy.special import ndtri

DISTRIBUTIONS = ("normal", "uniform", "laplace")
STRUCTURES = ("linear", "cubic")

_U53 = 2.0 ** -53


@dataclass(frozen=True)
class Seed:
    """Stream identity: (base, trial_index) pins one reproducible stream."""

    base: int
    trial_index: int = 0

    def generator(self) -> np.random.Generator:
        key = np.array([self.base, self.trial_index], dtype=np.uint64)
        return np.random.Generator(np.random.Philox(key=key))


@dataclass(frozen=True)
class ModelSpec:
    """One structural model: y = x + noise or y = x**3 + noise.

    The cause is always drawn at scale 1; ``noise_scale`` multiplies the
    noise distribution (standard deviation for normal, half-width for
    uniform, scale parameter for laplace).
    """

    structure: str
    x_dist: str
    noise_dist: str
    noise_scale: float
    n_samples: int = 1000

    def __post_init__(self):
        if self.structure not in STRUCTURES:
            raise ValueError(f"unknown structure {self.structure!r}")
        if self.x_dist not in DISTRIBUTIONS or self.noise_dist not in DISTRIBUTIONS:
            raise ValueError(f"unknown distribution in {self.x_dist!r}/{self.noise_dist!r}")
        if not self.noise_scale > 0:
            raise ValueError(f"noise_scale must be positive, got {self.noise_scale}")
        if self.n_samples < 10:
            raise ValueError(f"n_samples must be at least 10, got {self.n_samples}")


@dataclass(frozen=True, eq=False)
class SamplePair:
    x: np.ndarray
    y: np.ndarray


def _open_uniforms(gen: np.random.Generator, n: int) -> np.ndarray:
    # (k + 0.5) / 2**53 lies strictly inside (0, 1), keeping inverse CDFs finite.
    k = gen.integers(0, 2 ** 53, size=n, dtype=np.uint64)
    return (k.astype(np.float64) + 0.5) * _U53


def _unit_draw(dist: str, u: np.ndarray) -> np.ndarray:
    if dist == "normal":
        return ndtri(u)
    if dist == "uniform":
        return 2.0 * u - 1.0
    if dist == "laplace":
        return -np.sign(u - 0.5) * np.log1p(-2.0 * np.abs(u - 0.5))
    raise ValueError(f"unknown distribution {dist!r}")


def sample(dist: str, scale: float, n: int, seed: Seed) -> np.ndarray:
    """Draw n i.i.d. values: normal(0, scale), uniform(-scale, scale) or
    laplace(0, scale). Exactly equals scale * sample(dist, 1, n, seed)."""
    if not scale > 0:
        raise ValueError(f"scale must be positive, got {scale}")
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    u = _open_uniforms(seed.generator(), n)
    return scale * _unit_draw(dist, u)


def generate_pair(spec: ModelSpec, seed: Seed) -> SamplePair:
    """Draw one (x, y) sample of ``spec.n_samples`` points.

    Cause and noise come from disjoint segments of the seed's stream, so
    they are independent and the whole pair is reproducible from the seed.
    """
    n = spec.n_samples
    u = _open_uniforms(seed.generator(), 2 * n)
    x = _unit_draw(spec.x_dist, u[:n])
    noise = spec.noise_scale * _unit_draw(spec.noise_dist, u[n:])
    y = (x ** 3 if spec.structure == "cubic" else x) + noise
    return SamplePair(x=x, y=y)


def noise_scale_grid() -> np.ndarray:
    """The 199 benchmark noise scales: hundredths 0.01..1.00 plus integers 2..100."""
    fine = np.arange(1, 101, dtype=np.float64) / 100.0
    coarse = np.arange(2, 101, dtype=np.float64)
    return np.concatenate([fine, coarse])


def format_noise_scale(value: float) -> str:
    """Canonical text for a grid tick: '0.07', '1', '25'. Used in CSV and file names."""
    if value == int(value):
        return str(int(value))
    if round(value, 2) == value or abs(round(value, 2) - value) < 1e-12:
        return f"{value:.2f}"
    return repr(float(value))
