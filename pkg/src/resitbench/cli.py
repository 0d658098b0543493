"""Command line entry point: accuracy sweeps with CSV, plot and summary output."""

import argparse
import json
import sys
from pathlib import Path

from .bench import (
    ALL_MODELS,
    SweepConfig,
    desk_profile,
    paper_profile,
    run_sweep,
    summarize_ranges,
    write_csv,
    write_failures_csv,
    write_summary_csv,
)
from .plots import write_plots
from .samples import noise_scale_grid
from .scores import ALL_ESTIMATORS

PROFILES = {"paper": paper_profile, "desk": desk_profile, "custom": SweepConfig}


def _parse_models(text: str) -> tuple:
    if text == "all":
        return ALL_MODELS
    models = []
    for item in text.split(","):
        parts = item.strip().split(":")
        if len(parts) != 3:
            raise argparse.ArgumentTypeError(
                f"model {item!r} must look like structure:x_dist:noise_dist"
            )
        models.append(tuple(parts))
    return tuple(models)


def _parse_estimators(text: str) -> tuple:
    if text == "all":
        return ALL_ESTIMATORS
    return tuple(item.strip() for item in text.split(","))


def _parse_noise_scales(text: str) -> tuple:
    if text == "grid":
        return tuple(noise_scale_grid())
    return tuple(float(item) for item in text.split(","))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="resitbench")
    sub = parser.add_subparsers(dest="command", required=True)
    sweep = sub.add_parser("sweep", help="run an accuracy sweep")
    sweep.add_argument("--profile", choices=sorted(PROFILES), default="custom")
    sweep.add_argument("--config", type=Path, help="JSON file with SweepConfig keys")
    sweep.add_argument("--models", type=_parse_models, help="'all' or structure:x_dist:noise_dist,...")
    sweep.add_argument("--estimators", type=_parse_estimators, help="'all' or comma list")
    sweep.add_argument("--i", type=_parse_noise_scales, dest="noise_scales",
                       help="'grid' or comma list of noise scales")
    sweep.add_argument("--reps", type=int, dest="repetitions")
    sweep.add_argument("--samples", type=int, dest="n_samples")
    sweep.add_argument("--seed", type=int, dest="base_seed")
    sweep.add_argument("--workers", type=int)
    sweep.add_argument("--cubic-coords", choices=("cube", "cbrt"), dest="cubic_coords",
                       help="coordinate handling of the cubic mechanism")
    sweep.add_argument("--out-csv", type=Path)
    sweep.add_argument("--plots", type=Path, help="directory for per-model SVG files")
    sweep.add_argument("--summary", type=Path, help="path for the 90%%-range summary CSV")
    return parser


def _config_from_args(args) -> SweepConfig:
    overrides = {}
    if args.config is not None:
        raw = json.loads(args.config.read_text())
        if "models" in raw:
            raw["models"] = tuple(tuple(m) for m in raw["models"])
        for key in ("estimators", "noise_scales"):
            if key in raw:
                raw[key] = tuple(raw[key])
        overrides.update(raw)
    for key in ("models", "estimators", "noise_scales", "repetitions", "n_samples",
                "base_seed", "workers", "cubic_coords"):
        value = getattr(args, key, None)
        if value is not None:
            overrides[key] = value
    return PROFILES[args.profile](**overrides)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    config = _config_from_args(args)

    failures = []
    records = run_sweep(config, failures=failures)
    n_cells = len(records)
    print(f"evaluated {n_cells} cells ({config.repetitions} repetitions each)")

    if args.out_csv is not None:
        args.out_csv.parent.mkdir(parents=True, exist_ok=True)
        write_csv(records, args.out_csv)
        print(f"wrote {args.out_csv}")
        if failures:
            failure_path = args.out_csv.with_suffix(".errors.csv")
            write_failures_csv(failures, failure_path)
            print(f"wrote {failure_path} ({len(failures)} failed trials)")
    if args.plots is not None:
        paths = write_plots(records, args.plots)
        print(f"wrote {len(paths)} plot files to {args.plots}")
    if args.summary is not None:
        args.summary.parent.mkdir(parents=True, exist_ok=True)
        write_summary_csv(summarize_ranges(records), args.summary)
        print(f"wrote {args.summary}")

    if failures:
        print(f"{len(failures)} trials failed; see diagnostics", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
