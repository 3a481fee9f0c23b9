import json

import numpy as np
import pytest

from illposed import (ConfigurationError, fit_rate, make_diagonal_model,
                      run_experiment, saturation_probe, write_report)
from illposed.experiments import Table, central_window


def test_fit_rate_examples():
    fit = fit_rate([1.0, 10.0], [1.0, 100.0])
    assert fit.slope == pytest.approx(2.0)
    assert fit.intercept == pytest.approx(0.0)
    fit = fit_rate([1.0, 10.0], [3.0, 3.0])
    assert fit.slope == pytest.approx(0.0)
    assert fit.r_squared == 1.0
    x = np.logspace(0, 2, 20)
    fit = fit_rate(x, 3.0 * x**-0.125)
    assert fit.slope == pytest.approx(-0.125, abs=1e-10)
    assert fit.r_squared == pytest.approx(1.0)


def test_fit_rate_window_and_errors():
    x = np.logspace(0, 3, 10)
    y = x**2
    y[0] = 1e6  # polluted endpoint excluded by the window
    fit = fit_rate(x, y, window=(1, 10))
    assert fit.slope == pytest.approx(2.0)
    assert fit.window == (1, 10)
    with pytest.raises(ConfigurationError):
        fit_rate([1.0], [1.0])
    with pytest.raises(ConfigurationError):
        fit_rate([1.0, 2.0], [0.0, 1.0])
    assert central_window(40, 0.2) == (8, 32)


def test_table_formatting(tmp_path):
    table = Table(("a", "b"), [(1.0 / 3.0, "x"), (2, "y")])
    path = tmp_path / "t.csv"
    table.to_csv(path)
    lines = path.read_text().splitlines()
    assert lines[0] == "a,b"
    assert lines[1].startswith("0.3333333333333333")
    assert lines[2] == "2,y"


def test_unknown_experiment_and_keys():
    with pytest.raises(ConfigurationError):
        run_experiment("nope")
    with pytest.raises(ConfigurationError):
        run_experiment("source_growth", {"bogus": 1})


def test_source_growth_small():
    report = run_experiment("source_growth", {
        "n": 100, "alpha_min": 1e-10, "alpha_points": 41,
        "presat_window": [1e-6, 1e-2], "plateau_window": [1e-10, 1e-8],
    })
    assert report.fits["presat_slope"].slope == pytest.approx(-0.125, abs=0.03)
    assert abs(report.fits["plateau_slope"].slope) <= 0.05
    assert report.metrics["max_source_recon_rel"] <= 1e-9
    table = report.datasets["source_growth"]
    xi = np.array(table.column("xi_norm"))
    res = np.array(table.column("residual"))
    alpha = np.array(table.column("alpha"))
    assert np.allclose(xi, res / alpha, rtol=1e-12)


def test_determinism_byte_identical(tmp_path):
    cfg = {"n": 32, "alpha_grid_size": 60}
    first = tmp_path / "a"
    second = tmp_path / "b"
    for out in (first, second):
        report = run_experiment("boundary_effect", cfg)
        write_report(report, out)
    for name in ("boundary_effect_by_delta.csv", "boundary_effect_by_alpha.csv",
                 "summary.json"):
        assert (first / name).read_bytes() == (second / name).read_bytes()


def test_summary_schema(tmp_path):
    report = run_experiment("source_growth", {"n": 50, "alpha_points": 21})
    write_report(report, tmp_path)
    summary = json.loads((tmp_path / "summary.json").read_text())
    assert summary["experiment"] == "source_growth"
    assert set(summary) == {"experiment", "fits", "metrics", "config", "seed"}
    for fit in summary["fits"].values():
        assert {"slope", "intercept", "r_squared"} <= set(fit)
    # config echo reproduces the run
    again = run_experiment("source_growth", summary["config"])
    assert again.datasets["source_growth"].rows == \
        report.datasets["source_growth"].rows


def test_rate_table_small():
    report = run_experiment("rate_table", {
        "n": 500, "deltas": list(np.logspace(-2, -4, 5)), "n_seeds": 2,
    })
    fit = report.fits["error_slope_apriori"]
    assert fit.r_squared >= 0.95
    assert fit.slope == pytest.approx(3.0 / 7.0, abs=0.08)
    rows = report.datasets["rate_table"].rows
    assert {r[4] for r in rows} == {"apriori", "discrepancy"}


def test_saturation_probe_regimes():
    grid = np.logspace(-8, -2, 41)
    rough = make_diagonal_model(2000, eta=2.0, beta_decay=(8 * 0.25 + 1) / 2)
    table, metrics = saturation_probe(rough, grid)
    assert metrics["residual_ratio_growth"] >= 10.0
    smooth = make_diagonal_model(2000, eta=2.0, beta_decay=(8 * 1.25 + 1) / 2)
    _, metrics = saturation_probe(smooth, grid)
    window = np.logspace(-6, -4, 21)
    _, band = saturation_probe(smooth, window)
    assert band["residual_ratio_max"] / band["residual_ratio_min"] <= 10.0
    assert band["error_ratio_max"] / band["error_ratio_min"] <= 10.0
    cols = table.columns
    assert cols == ("alpha", "residual", "error", "residual_over_alpha",
                    "error_over_alpha")


def test_jobs_parallel_matches_serial():
    cfg = {"n": 200, "deltas": list(np.logspace(-2, -3, 3)), "n_seeds": 2}
    serial = run_experiment("rate_table", cfg, jobs=1)
    parallel = run_experiment("rate_table", cfg, jobs=4)
    assert serial.datasets["rate_table"].rows == \
        parallel.datasets["rate_table"].rows
