"""The twelve named score estimators and their dispatch.

Dependence estimators score a pair directly; entropy estimators score
the sum of the two marginal entropies. Lower is better in both families
when comparing candidate directions.
"""

from functools import partial

from . import dependence, entropy

DEPENDENCE_ESTIMATORS = {
    "hsic": dependence.hsic,
    "hsic_ic": partial(dependence.hsic_incomplete_cholesky, eta=1e-6),
    "hsic_ic2": partial(dependence.hsic_incomplete_cholesky, eta=1e-2),
    "distcov": dependence.dist_cov,
    "distcorr": dependence.dist_corr,
    "hoeffding": dependence.hoeffding_phi,
}

ENTROPY_ESTIMATORS = {
    "sh_knn": partial(entropy.knn_entropy, k=3, neighbor_algo="brute"),
    "sh_knn_2": partial(entropy.knn_entropy, k=3, neighbor_algo="kdtree"),
    "sh_knn_3": partial(entropy.knn_entropy, k=5, neighbor_algo="brute"),
    "sh_maxent1": partial(entropy.maxent_entropy, variant=1),
    "sh_maxent2": partial(entropy.maxent_entropy, variant=2),
    "sh_spacing_v": entropy.vasicek_entropy,
}

ALL_ESTIMATORS = tuple(DEPENDENCE_ESTIMATORS) + tuple(ENTROPY_ESTIMATORS)


def score_family(estimator: str) -> str:
    if estimator in DEPENDENCE_ESTIMATORS:
        return "dependence"
    if estimator in ENTROPY_ESTIMATORS:
        return "entropy"
    raise ValueError(f"unknown estimator {estimator!r}; expected one of {ALL_ESTIMATORS}")


def score_pair(a, r, estimator: str) -> float:
    """Directional score: I(a, r) for dependence kinds, H(a) + H(r) for entropy kinds."""
    if estimator in DEPENDENCE_ESTIMATORS:
        return float(DEPENDENCE_ESTIMATORS[estimator](a, r))
    if estimator in ENTROPY_ESTIMATORS:
        h = ENTROPY_ESTIMATORS[estimator]
        return float(h(a) + h(r))
    raise ValueError(f"unknown estimator {estimator!r}; expected one of {ALL_ESTIMATORS}")
