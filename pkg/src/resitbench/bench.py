"""Accuracy sweep over models x noise scales x estimators.

Every trial seed is derived by hashing its cell coordinates, so any
cell can be recomputed in isolation and the sweep output is identical
for any worker count.
"""

import csv
import hashlib
import itertools
from dataclasses import dataclass

from joblib import Parallel, delayed

from .resit import X_TO_Y, DirectionVerdict, decide_direction
from .samples import (
    DISTRIBUTIONS,
    STRUCTURES,
    ModelSpec,
    Seed,
    format_noise_scale,
    generate_pair,
    noise_scale_grid,
)
from .scores import ALL_ESTIMATORS

ALL_MODELS = tuple(
    (structure, x_dist, noise_dist)
    for structure in STRUCTURES
    for x_dist in DISTRIBUTIONS
    for noise_dist in DISTRIBUTIONS
)

# Coordinate maps per structure; "cbrt" is the alternative handling of
# the cubic mechanism exposed through SweepConfig.cubic_coords.
CUBIC_COORDS = {
    "cube": ("cube", "identity"),
    "cbrt": ("identity", "signed_cbrt"),
}

CSV_HEADER = (
    "structure,x_dist,noise_dist,i,estimator,n_samples,repetitions,successes,accuracy,base_seed"
)


@dataclass(frozen=True)
class SweepConfig:
    models: tuple = ALL_MODELS
    noise_scales: tuple = tuple(noise_scale_grid())
    estimators: tuple = ALL_ESTIMATORS
    repetitions: int = 100
    n_samples: int = 1000
    base_seed: int = 0
    workers: int = 1
    cubic_coords: str = "cube"

    def cells(self):
        for model, estimator, scale in itertools.product(
            self.models, self.estimators, self.noise_scales
        ):
            yield model, estimator, float(scale)


@dataclass(frozen=True)
class AccuracyRecord:
    structure: str
    x_dist: str
    noise_dist: str
    noise_scale: float
    estimator: str
    n_samples: int
    repetitions: int
    successes: int
    accuracy: float
    base_seed: int


@dataclass(frozen=True)
class TrialFailure:
    structure: str
    x_dist: str
    noise_dist: str
    noise_scale: float
    estimator: str
    repetition: int
    error: str


@dataclass(frozen=True)
class RangeSummary:
    """First/last grid scale where accuracy stays at or above the threshold.

    ``lower_open``/``upper_open`` mark bounds that sit on the grid edge
    (the true interval may extend beyond the tested range); ``reached``
    is False when the threshold was never hit. ``valid`` is False when
    more than the slack fraction of interior grid points dip below the
    threshold.
    """

    structure: str
    x_dist: str
    noise_dist: str
    estimator: str
    lower: float | None
    upper: float | None
    lower_open: bool
    upper_open: bool
    reached: bool
    valid: bool
    dip_fraction: float

    def format_range(self) -> str:
        if not self.reached:
            return ""
        lo = "" if self.lower_open else format_noise_scale(self.lower)
        hi = "" if self.upper_open else format_noise_scale(self.upper)
        return f"{lo} - {hi}"


def transforms_for_structure(structure: str, cubic_coords: str = "cube"):
    if structure == "linear":
        return "identity", "identity"
    try:
        return CUBIC_COORDS[cubic_coords]
    except KeyError:
        raise ValueError(f"unknown cubic_coords {cubic_coords!r}; expected one of {sorted(CUBIC_COORDS)}") from None


def trial_seed(
    base_seed: int,
    structure: str,
    x_dist: str,
    noise_dist: str,
    noise_scale: float,
    estimator: str,
    repetition: int,
) -> Seed:
    """Stable 64-bit stream id from the cell coordinates and repetition."""
    tag = "|".join(
        (structure, x_dist, noise_dist, format_noise_scale(noise_scale), estimator, str(repetition))
    )
    digest = hashlib.sha256(tag.encode("ascii")).digest()
    return Seed(base=base_seed, trial_index=int.from_bytes(digest[:8], "little"))


def run_trial(spec: ModelSpec, estimator: str, seed: Seed, cubic_coords: str = "cube") -> DirectionVerdict:
    """Generate one pair from the spec and decide its direction."""
    x_transform, y_transform = transforms_for_structure(spec.structure, cubic_coords)
    pair = generate_pair(spec, seed)
    return decide_direction(
        pair.x,
        pair.y,
        estimator=estimator,
        x_transform=x_transform,
        y_transform=y_transform,
    )


def _run_cell(config: SweepConfig, model, estimator: str, noise_scale: float):
    structure, x_dist, noise_dist = model
    spec = ModelSpec(
        structure=structure,
        x_dist=x_dist,
        noise_dist=noise_dist,
        noise_scale=noise_scale,
        n_samples=config.n_samples,
    )
    successes = 0
    completed = 0
    failures = []
    for rep in range(config.repetitions):
        seed = trial_seed(
            config.base_seed, structure, x_dist, noise_dist, noise_scale, estimator, rep
        )
        try:
            verdict = run_trial(spec, estimator, seed, cubic_coords=config.cubic_coords)
        except Exception as exc:  # collected; the sweep continues
            failures.append(
                TrialFailure(structure, x_dist, noise_dist, noise_scale, estimator, rep, repr(exc))
            )
            continue
        completed += 1
        successes += verdict.direction == X_TO_Y
    record = AccuracyRecord(
        structure=structure,
        x_dist=x_dist,
        noise_dist=noise_dist,
        noise_scale=noise_scale,
        estimator=estimator,
        n_samples=config.n_samples,
        repetitions=completed,
        successes=successes,
        accuracy=successes / completed if completed else 0.0,
        base_seed=config.base_seed,
    )
    return record, failures


def run_sweep(config: SweepConfig, failures: list | None = None) -> list:
    """Evaluate every (model, estimator, noise scale) cell of the config.

    Trial errors never abort the sweep; pass a list as ``failures`` to
    collect them (accuracy is then taken over the completed trials).
    """
    cells = list(config.cells())
    if not cells:
        raise ValueError("empty sweep: models, estimators and noise_scales must be nonempty")
    results = Parallel(n_jobs=config.workers)(
        delayed(_run_cell)(config, model, estimator, scale) for model, estimator, scale in cells
    )
    records = []
    for record, cell_failures in results:
        records.append(record)
        if failures is not None:
            failures.extend(cell_failures)
    return records


def _record_sort_key(record: AccuracyRecord):
    return (
        record.structure,
        record.x_dist,
        record.noise_dist,
        record.estimator,
        record.noise_scale,
    )


def summarize_ranges(records, threshold: float = 0.9, slack: float = 0.1) -> list:
    """Per (model, estimator): the span of grid scales reaching the threshold."""
    eps = 1e-12
    summaries = []
    keyfunc = lambda r: (r.structure, r.x_dist, r.noise_dist, r.estimator)
    for key, group in itertools.groupby(sorted(records, key=_record_sort_key), key=keyfunc):
        group = list(group)
        scales = [r.noise_scale for r in group]
        ok = [r.accuracy >= threshold - eps for r in group]
        if not any(ok):
            summaries.append(
                RangeSummary(*key, lower=None, upper=None, lower_open=False,
                             upper_open=False, reached=False, valid=True, dip_fraction=0.0)
            )
            continue
        first = ok.index(True)
        last = len(ok) - 1 - ok[::-1].index(True)
        interior = ok[first + 1 : last]
        dip = (len(interior) - sum(interior)) / len(interior) if interior else 0.0
        summaries.append(
            RangeSummary(
                *key,
                lower=scales[first],
                upper=scales[last],
                lower_open=first == 0,
                upper_open=last == len(ok) - 1,
                reached=True,
                valid=dip <= slack,
                dip_fraction=dip,
            )
        )
    return summaries


def write_csv(records, path) -> None:
    """One row per record, sorted canonically, with the fixed header."""
    rows = sorted(records, key=_record_sort_key)
    with open(path, "w", newline="") as fh:
        fh.write(CSV_HEADER + "\n")
        writer = csv.writer(fh)
        for r in rows:
            writer.writerow(
                [
                    r.structure,
                    r.x_dist,
                    r.noise_dist,
                    format_noise_scale(r.noise_scale),
                    r.estimator,
                    r.n_samples,
                    r.repetitions,
                    r.successes,
                    f"{r.accuracy:.6g}",
                    r.base_seed,
                ]
            )


def write_failures_csv(failures, path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["structure", "x_dist", "noise_dist", "i", "estimator", "errors", "first_error"])
        keyfunc = lambda f: (f.structure, f.x_dist, f.noise_dist, f.noise_scale, f.estimator)
        for key, group in itertools.groupby(sorted(failures, key=keyfunc), key=keyfunc):
            group = list(group)
            structure, x_dist, noise_dist, scale, estimator = key
            writer.writerow(
                [structure, x_dist, noise_dist, format_noise_scale(scale), estimator,
                 len(group), group[0].error]
            )


def write_summary_csv(summaries, path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            ["structure", "x_dist", "noise_dist", "estimator", "lower", "upper",
             "lower_open", "upper_open", "reached", "valid", "range"]
        )
        for s in summaries:
            writer.writerow(
                [
                    s.structure,
                    s.x_dist,
                    s.noise_dist,
                    s.estimator,
                    "" if s.lower is None else format_noise_scale(s.lower),
                    "" if s.upper is None else format_noise_scale(s.upper),
                    s.lower_open,
                    s.upper_open,
                    s.reached,
                    s.valid,
                    s.format_range(),
                ]
            )


def paper_profile(**overrides) -> SweepConfig:
    """The full benchmark protocol: 18 models, 199 scales, 12 estimators, 100 reps."""
    return SweepConfig(**overrides)


def desk_profile(**overrides) -> SweepConfig:
    """Reduced grid covering all models and estimators at five noise scales."""
    defaults = dict(noise_scales=(0.1, 0.5, 1.0, 2.0, 10.0), repetitions=25)
    defaults.update(overrides)
    return SweepConfig(**defaults)
