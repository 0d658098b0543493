import csv
import json

import pytest

import resitbench.bench
from resitbench.cli import _parse_noise_scales, build_parser, main


def test_parse_noise_scales_grid():
    assert len(_parse_noise_scales("grid")) == 199
    assert _parse_noise_scales("0.5,1,2") == (0.5, 1.0, 2.0)


def test_parser_rejects_bad_model():
    parser = build_parser()
    with pytest.raises(SystemExit):
        parser.parse_args(["sweep", "--models", "linear-normal-normal"])


def test_sweep_end_to_end(tmp_path, capsys):
    # fresh subdirectory: output parents must be created on demand
    out_csv = tmp_path / "out" / "records.csv"
    plots = tmp_path / "figs"
    summary = tmp_path / "out" / "summary.csv"
    code = main(
        [
            "sweep",
            "--models", "linear:uniform:uniform",
            "--estimators", "sh_spacing_v",
            "--i", "0.5,1",
            "--reps", "3",
            "--samples", "100",
            "--seed", "3",
            "--workers", "1",
            "--out-csv", str(out_csv),
            "--plots", str(plots),
            "--summary", str(summary),
        ]
    )
    assert code == 0
    rows = list(csv.DictReader(out_csv.open()))
    assert len(rows) == 2
    assert rows[0]["i"] == "0.50" and rows[1]["i"] == "1"
    assert rows[0]["repetitions"] == "3"
    assert (plots / "linear_uniform_uniform.svg").exists()
    assert summary.exists()
    assert "evaluated 2 cells" in capsys.readouterr().out


def test_config_file_and_flag_override(tmp_path):
    config = {
        "models": [["linear", "uniform", "uniform"]],
        "estimators": ["sh_spacing_v", "distcov"],
        "noise_scales": [0.5],
        "repetitions": 2,
        "n_samples": 100,
        "base_seed": 11,
    }
    config_path = tmp_path / "cfg.json"
    config_path.write_text(json.dumps(config))
    out_csv = tmp_path / "records.csv"
    code = main(
        ["sweep", "--config", str(config_path), "--estimators", "sh_spacing_v",
         "--out-csv", str(out_csv)]
    )
    assert code == 0
    rows = list(csv.DictReader(out_csv.open()))
    assert len(rows) == 1  # flag narrowed the estimator list from the file
    assert rows[0]["estimator"] == "sh_spacing_v"
    assert rows[0]["base_seed"] == "11"


def test_nonzero_exit_on_trial_failure(tmp_path, monkeypatch):
    def broken(spec, estimator, seed, cubic_coords="cube"):
        raise RuntimeError("injected")

    monkeypatch.setattr(resitbench.bench, "run_trial", broken)
    out_csv = tmp_path / "records.csv"
    code = main(
        ["sweep", "--models", "linear:uniform:uniform", "--estimators", "sh_spacing_v",
         "--i", "1", "--reps", "2", "--samples", "100", "--out-csv", str(out_csv)]
    )
    assert code == 1
    errors = out_csv.with_suffix(".errors.csv")
    assert errors.exists()
    rows = list(csv.DictReader(errors.open()))
    assert rows[0]["errors"] == "2"
