"""Accuracy-vs-noise-scale figures, one vector file per model.

Dependence estimators get solid lines, entropy estimators dashed ones;
reference lines mark chance (0.5) and the 0.9 identifiability level.
"""

import itertools
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
matplotlib.rcParams["svg.fonttype"] = "none"  # keep legend labels as searchable text

import matplotlib.pyplot as plt

from .scores import ENTROPY_ESTIMATORS


def _model_title(structure: str, x_dist: str, noise_dist: str) -> str:
    mechanism = "y = x^3 + n" if structure == "cubic" else "y = x + n"
    return f"{mechanism}   (x ~ {x_dist}, n ~ {noise_dist})"


def model_plot_name(structure: str, x_dist: str, noise_dist: str) -> str:
    return f"{structure}_{x_dist}_{noise_dist}.svg"


def write_plots(records, out_dir) -> list:
    """Write one SVG per model present in the records; returns the paths."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = []
    model_key = lambda r: (r.structure, r.x_dist, r.noise_dist)
    series_key = lambda r: r.estimator
    for model, model_records in itertools.groupby(
        sorted(records, key=lambda r: (*model_key(r), r.estimator, r.noise_scale)), key=model_key
    ):
        fig, ax = plt.subplots(figsize=(7.0, 4.5))
        for estimator, series in itertools.groupby(model_records, key=series_key):
            series = list(series)
            style = "--" if estimator in ENTROPY_ESTIMATORS else "-"
            ax.plot(
                [r.noise_scale for r in series],
                [r.accuracy for r in series],
                style,
                linewidth=1.2,
                label=estimator,
            )
        ax.axhline(0.5, color="0.6", linestyle=":", linewidth=0.9)
        ax.axhline(0.9, color="0.6", linestyle=":", linewidth=0.9)
        ax.set_xscale("log")
        ax.set_ylim(-0.02, 1.02)
        ax.set_xlabel("noise scale (i)")
        ax.set_ylabel("accuracy")
        ax.set_title(_model_title(*model))
        ax.legend(fontsize=7, ncol=2, loc="lower left", framealpha=0.8)
        path = out_dir / model_plot_name(*model)
        fig.savefig(path, format="svg")
        plt.close(fig)
        paths.append(path)
    return paths
