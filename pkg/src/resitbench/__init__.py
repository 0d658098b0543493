"""Causal direction identification for bivariate additive noise models.

Fit a regression in each candidate direction, score the held-out
residuals against the held-out regressor with an independence test or
an entropy sum, and prefer the direction with the smaller score. The
bench module sweeps synthetic models over a grid of noise scales to map
where each estimator keeps identifying the true direction.
"""

from .bench import (
    ALL_MODELS,
    AccuracyRecord,
    RangeSummary,
    SweepConfig,
    TrialFailure,
    desk_profile,
    paper_profile,
    run_sweep,
    run_trial,
    summarize_ranges,
    transforms_for_structure,
    trial_seed,
    write_csv,
    write_failures_csv,
    write_summary_csv,
)
from .dependence import (
    dist_corr,
    dist_cov,
    dist_var,
    hoeffding_phi,
    hsic,
    hsic_incomplete_cholesky,
)
from .entropy import knn_entropy, knn_entropy_equivalence, maxent_entropy, vasicek_entropy
from .exceptions import DirectionError, EstimatorError, RegressionError
from .plots import write_plots
from .regression import TRANSFORMS, RegressionModel, apply_transform, fit_regression
from .resit import UNDECIDED, X_TO_Y, Y_TO_X, DirectionVerdict, Resit, decide_direction
from .samples import (
    DISTRIBUTIONS,
    STRUCTURES,
    ModelSpec,
    SamplePair,
    Seed,
    format_noise_scale,
    generate_pair,
    noise_scale_grid,
    sample,
)
from .scores import ALL_ESTIMATORS, DEPENDENCE_ESTIMATORS, ENTROPY_ESTIMATORS, score_family, score_pair

__version__ = "0.1.0"

__all__ = [
    "ALL_ESTIMATORS",
    "ALL_MODELS",
    "AccuracyRecord",
    "DEPENDENCE_ESTIMATORS",
    "DISTRIBUTIONS",
    "DirectionError",
    "DirectionVerdict",
    "ENTROPY_ESTIMATORS",
    "EstimatorError",
    "ModelSpec",
    "RangeSummary",
    "RegressionError",
    "RegressionModel",
    "Resit",
    "STRUCTURES",
    "SamplePair",
    "Seed",
    "SweepConfig",
    "TRANSFORMS",
    "TrialFailure",
    "UNDECIDED",
    "X_TO_Y",
    "Y_TO_X",
    "apply_transform",
    "decide_direction",
    "desk_profile",
    "dist_corr",
    "dist_cov",
    "dist_var",
    "fit_regression",
    "format_noise_scale",
    "generate_pair",
    "hoeffding_phi",
    "hsic",
    "hsic_incomplete_cholesky",
    "knn_entropy",
    "knn_entropy_equivalence",
    "maxent_entropy",
    "noise_scale_grid",
    "paper_profile",
    "run_sweep",
    "run_trial",
    "sample",
    "score_family",
    "score_pair",
    "summarize_ranges",
    "transforms_for_structure",
    "trial_seed",
    "vasicek_entropy",
    "write_csv",
    "write_failures_csv",
    "write_plots",
    "write_summary_csv",
]
