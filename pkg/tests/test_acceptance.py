"""Acceptance checks.

Each test prints one ``[PASS]``/``[FAIL]`` line per criterion (run with
``pytest -s`` to see them live).  Criteria are asserted at their stated
tolerances; section numbers refer to the criterion list in the README.
"""

import numpy as np
import pytest

from illposed import (InverseProblem, add_noise, build_svd_operator,
                      landweber, make_diagonal_model, noise_distance,
                      run_experiment, tikhonov, write_report)

THEORY_RATE = {0.25: 1 / 3, 1.25: 5 / 7, 3.25: 2 * 3.25 / (2 * 3.25 + 1)}


def _check(label: str, ok: bool, detail: str = "") -> bool:
    line = f"[{'PASS' if ok else 'FAIL'}] {label}"
    if detail:
        line += f"  ({detail})"
    print(line)
    return ok


@pytest.fixture(scope="module")
def reports():
    names = ("boundary_effect", "asc_curves", "discrete_asc", "source_growth",
             "rate_table", "high_order_saturation", "oversmoothing_rate",
             "landweber_vs_tikhonov")
    return {name: run_experiment(name) for name in names}


def test_criterion_01_filter_oracle_equivalence():
    rng = np.random.default_rng(101)
    worst = 0.0
    for trial in range(100):
        matrix = rng.standard_normal((20, 20))
        op = build_svd_operator(matrix, normalize=True)
        matrix = matrix / op.norm_scale
        x = rng.standard_normal(20)
        problem = InverseProblem(op=op, x_true=x, y_exact=matrix @ x)
        data = problem.y_exact + 0.01 * rng.standard_normal(20)
        alpha = 10.0 ** rng.uniform(-7, 0)
        kappa = trial % 3
        sol = tikhonov(problem, data, alpha, kappa_order=kappa)
        ata = matrix.T @ matrix
        lhs = np.linalg.matrix_power(ata, kappa + 1) + alpha * np.eye(20)
        rhs = np.linalg.matrix_power(ata, kappa) @ (matrix.T @ data)
        oracle = np.linalg.solve(lhs, rhs)
        rel = np.linalg.norm(sol.nodal(problem) - oracle) / np.linalg.norm(oracle)
        worst = max(worst, rel)
    ok = _check("criterion 1: Tikhonov filter vs dense normal equations",
                worst <= 1e-8, f"worst rel dev {worst:.2e}")
    assert ok


def test_criterion_02_landweber_summed_vs_loop():
    rng = np.random.default_rng(202)
    worst = 0.0
    for _ in range(20):
        matrix = rng.standard_normal((10, 10))
        op = build_svd_operator(matrix)
        x = rng.standard_normal(10)
        problem = InverseProblem(op=op, x_true=x, y_exact=matrix @ x)
        data = problem.y_exact + 0.05 * rng.standard_normal(10)
        beta = 1.0 / op.sigmas[0] ** 2
        sols = landweber(problem, data, beta, 100,
                         checkpoints=list(range(1, 101)))
        x_loop = np.zeros(10)
        for k, sol in enumerate(sols, start=1):
            x_loop = x_loop - beta * (matrix.T @ (matrix @ x_loop - data))
            rel = (np.linalg.norm(sol.nodal(problem) - x_loop)
                   / np.linalg.norm(x_loop))
            worst = max(worst, rel)
    ok = _check("criterion 2: Landweber summed form vs explicit loop",
                worst <= 1e-10, f"worst rel dev {worst:.2e}")
    assert ok


def test_criterion_03_source_representation_invariant(reports):
    worst = 0.0
    for name, report in reports.items():
        value = report.metrics.get("max_source_recon_rel")
        if value is not None:
            worst = max(worst, value)
    ok = _check("criterion 3: A* xi reproduces every Tikhonov solution",
                worst <= 1e-9, f"worst rel defect {worst:.2e}")
    assert ok


def test_criterion_04_asc_asymptotic_slopes(reports):
    fits = reports["asc_curves"].fits
    f0 = fits["slope_nu0_plain"]
    fh = fits["slope_nuhalf_plain"]
    ok = True
    ok &= _check("criterion 4a: solution-distance slope -3 +- 0.15, r2>=0.99",
                 abs(f0.slope + 3.0) <= 0.15 and f0.r_squared >= 0.99,
                 f"slope {f0.slope:.3f}, r2 {f0.r_squared:.5f}")
    ok &= _check("criterion 4b: data-distance slope -7 +- 0.15, r2>=0.99",
                 abs(fh.slope + 7.0) <= 0.15 and fh.r_squared >= 0.99,
                 f"slope {fh.slope:.3f}, r2 {fh.r_squared:.5f}")
    assert ok


def test_criterion_05_discrete_three_regimes(reports):
    report = reports["discrete_asc"]
    floor_ratio = report.metrics["floor_ratio_n20"]
    ok_floor = _check("criterion 5a: n=20 floor reaches d <= 1e-8 ||x||",
                      floor_ratio <= 1e-8, f"floor ratio {floor_ratio:.2e}")
    fit = report.fits.get("intermediate_n20")
    if fit is None:
        ok_slope = _check("criterion 5b: intermediate regime slope -0.5 +- 0.15",
                          False, "no intermediate-regime points to fit")
    else:
        ok_slope = _check(
            "criterion 5b: intermediate regime slope -0.5 +- 0.15",
            abs(fit.slope + 0.5) <= 0.15,
            f"slope {fit.slope:.2f}, r2 {fit.r_squared:.3f}; the exact curve "
            "drops from the asymptotic branch to the floor with no -1/2 "
            "stretch (see decisions ledger)",
        )
    assert ok_floor
    assert ok_slope


def test_criterion_06_noise_distance_bound():
    problem = make_diagonal_model(5000, eta=2.0, beta_decay=2.0)
    grid = np.logspace(-2, 2, 40)
    worst = 0.0
    for seed in range(42, 47):
        sample = add_noise(problem, 0.005, seed=seed)
        eps = problem.y_exact - sample.y_delta
        bound = sample.delta_abs * (1.0 + 1e-6)
        for R in grid:
            pt = noise_distance(problem.op, eps, 0.5, R)
            worst = max(worst, pt.d / bound)
    ok = _check("criterion 6: noise distance stays below the noise level",
                worst <= 1.0, f"worst d/bound {worst:.9f}")
    assert ok


def test_criterion_07_source_growth(reports):
    fits = reports["source_growth"].fits
    pre = fits["presat_slope"]
    plat = fits["plateau_slope"]
    ok = True
    ok &= _check("criterion 7a: pre-saturation source growth -0.125 +- 0.02",
                 abs(pre.slope + 0.125) <= 0.02 and pre.r_squared >= 0.95,
                 f"slope {pre.slope:.4f}, r2 {pre.r_squared:.4f}")
    ok &= _check("criterion 7b: saturated plateau |slope| <= 0.03",
                 abs(plat.slope) <= 0.03, f"slope {plat.slope:.5f}")
    assert ok


def test_criterion_08_rate_and_coincidence(reports):
    report = reports["rate_table"]
    target = 3.0 / 7.0
    ok = True
    for rule in ("apriori", "discrepancy"):
        fit = report.fits[f"error_slope_{rule}"]
        ok &= _check(
            f"criterion 8: error rate {target:.4f} +- 0.05 ({rule})",
            abs(fit.slope - target) <= 0.05 and fit.r_squared >= 0.95,
            f"slope {fit.slope:.4f}, r2 {fit.r_squared:.4f}")
    agreement = report.metrics["alpha_slope_agreement"]
    ok &= _check("criterion 8: parameter-choice slopes agree within 0.1",
                 agreement <= 0.1, f"difference {agreement:.4f}")
    assert ok


def test_criterion_09_high_order_saturation(reports):
    report = reports["high_order_saturation"]
    ok = True
    for mu in (0.25, 1.25):
        fit = report.fits[f"rate_mu{mu:g}"]
        ok &= _check(
            f"criterion 9: mu={mu} observed rate within 0.1 of "
            f"{THEORY_RATE[mu]:.3f}",
            abs(fit.slope - THEORY_RATE[mu]) <= 0.1 and fit.r_squared >= 0.95,
            f"slope {fit.slope:.3f}, r2 {fit.r_squared:.4f}")
    fit = report.fits["rate_mu3.25"]
    ceiling = THEORY_RATE[3.25] - 0.1
    ok &= _check(
        "criterion 9: mu=3.25 rate at least 0.1 below theoretical "
        f"{THEORY_RATE[3.25]:.3f} (saturation)",
        fit.slope <= ceiling and fit.r_squared >= 0.95,
        f"slope {fit.slope:.3f} vs ceiling {ceiling:.3f}")
    assert ok


def test_criterion_10_oversmoothing_rate(reports):
    fit = reports["oversmoothing_rate"].fits["error_slope_apriori"]
    ok = _check("criterion 10: oversmoothing penalty still gives rate "
                "0.5 +- 0.05",
                abs(fit.slope - 0.5) <= 0.05 and fit.r_squared >= 0.95,
                f"slope {fit.slope:.4f}, r2 {fit.r_squared:.4f}")
    assert ok


def test_criterion_11_boundary_effect(reports):
    report = reports["boundary_effect"]
    ok = True
    for delta in report.config["deltas"]:
        ratio = report.metrics[f"boundary_ratio_d{delta:g}"]
        ok &= _check(
            f"criterion 11: n=64 boundary samples <= 0.1 max (delta={delta:g})",
            ratio <= 0.1, f"ratio {ratio:.3f}")
    # resolution study (informational): the boundary layer of the oracle
    # reconstruction needs roughly n >= 1500 midpoints to fall inside the
    # first sample; see decisions ledger
    fine = run_experiment("boundary_effect", {"n": 1536})
    for delta in fine.config["deltas"]:
        ratio = fine.metrics[f"boundary_ratio_d{delta:g}"]
        print(f"[info] n=1536 boundary ratio (delta={delta:g}): {ratio:.3f}")
    assert ok


def test_criterion_12_landweber_vs_tikhonov(reports):
    metrics = reports["landweber_vs_tikhonov"].metrics
    ok = True
    for tag in ("noisefree", "noisy"):
        dev = metrics[f"sup_rel_deviation_{tag}"]
        ok &= _check(
            f"criterion 12: error-vs-source-norm curves within 10% ({tag})",
            dev <= 0.10,
            f"sup rel deviation {dev:.3f}; interior agreement is ~6% but the "
            "overlap edge / noise branch carry a structural offset (see "
            "decisions ledger)")
    assert ok


def test_criterion_13_determinism(tmp_path, reports):
    ok = True
    for name in ("boundary_effect", "source_growth"):
        dirs = (tmp_path / f"{name}_1", tmp_path / f"{name}_2")
        outputs = []
        for d in dirs:
            report = run_experiment(name)
            outputs.append({p.name: p.read_bytes()
                            for p in write_report(report, d)})
        same = outputs[0] == outputs[1]
        ok &= _check(f"criterion 13: byte-identical rerun ({name})", same)
    assert ok
