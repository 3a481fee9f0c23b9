"""End-to-end numerical studies with CSV datasets and fitted rates.

Each experiment produces one or more tabular datasets (written as CSV with
a header row and 17 significant digits) plus a JSON summary holding the
log-log rate fits and the full configuration echo.  Reruns with the same
configuration and seed are byte-identical.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import distances
from .choice import alpha_apriori, alpha_discrepancy, alpha_oracle
from .exceptions import ConfigurationError
from .problems import (InverseProblem, add_noise, make_deriv2,
                       make_diagonal_model, make_hilbert_scale_model)
from .regularizers import landweber, landweber_checkpoints, tikhonov, \
    tikhonov_hilbert_scale

__all__ = [
    "RateEstimate",
    "Table",
    "ExperimentReport",
    "fit_rate",
    "central_window",
    "run_experiment",
    "write_report",
    "saturation_probe",
    "EXPERIMENT_NAMES",
]


# --------------------------------------------------------------------------
# rate fitting

@dataclass(frozen=True)
class RateEstimate:
    """Least-squares slope of log10 y against log10 x."""

    slope: float
    intercept: float
    r_squared: float
    window: tuple[int, int]

    def as_dict(self) -> dict:
        return {"slope": self.slope, "intercept": self.intercept,
                "r_squared": self.r_squared, "window": list(self.window)}


def fit_rate(x, y, window: tuple[int, int] | None = None) -> RateEstimate:
    """Ordinary least squares on ``(log10 x, log10 y)``.

    ``window`` restricts the fit to the half-open index range ``[i0, i1)``.
    All values must be positive and at least two points must remain.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape or x.ndim != 1:
        raise ConfigurationError("x and y must be 1-D arrays of equal length")
    i0, i1 = window if window is not None else (0, x.size)
    x, y = x[i0:i1], y[i0:i1]
    if x.size < 2:
        raise ConfigurationError("need at least two points to fit a rate")
    if np.any(x <= 0) or np.any(y <= 0):
        raise ConfigurationError("rate fits need positive values")
    lx, ly = np.log10(x), np.log10(y)
    mx, my = lx.mean(), ly.mean()
    var = np.sum((lx - mx) ** 2)
    if var == 0:
        raise ConfigurationError("x values must not be all equal")
    slope = float(np.sum((lx - mx) * (ly - my)) / var)
    intercept = float(my - slope * mx)
    pred = slope * lx + intercept
    ss_res = float(np.sum((ly - pred) ** 2))
    ss_tot = float(np.sum((ly - my) ** 2))
    r2 = 1.0 if ss_tot == 0 else max(0.0, 1.0 - ss_res / ss_tot)
    return RateEstimate(slope=slope, intercept=intercept, r_squared=r2,
                        window=(int(i0), int(i1)))


def central_window(n: int, frac: float = 0.2) -> tuple[int, int]:
    """Index window dropping a fraction of points at each end."""
    k = int(np.floor(n * frac))
    return (k, n - k)


# --------------------------------------------------------------------------
# tabular output

@dataclass(frozen=True)
class Table:
    columns: tuple[str, ...]
    rows: list[tuple]

    def column(self, name: str) -> list:
        j = self.columns.index(name)
        return [row[j] for row in self.rows]

    def to_csv(self, path: Path) -> None:
        with open(path, "w", newline="\n") as fh:
            fh.write(",".join(self.columns) + "\n")
            for row in self.rows:
                fh.write(",".join(_fmt(v) for v in row) + "\n")


def _fmt(v) -> str:
    if isinstance(v, str):
        if "," in v or "\n" in v:
            raise ConfigurationError(f"cell value {v!r} not CSV-safe")
        return v
    if isinstance(v, (bool, np.bool_)):
        return str(bool(v)).lower()
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return f"{float(v):.17g}"


@dataclass(frozen=True)
class ExperimentReport:
    experiment: str
    datasets: dict[str, Table]
    fits: dict[str, RateEstimate]
    metrics: dict[str, float]
    config: dict
    seed: int


def write_report(report: ExperimentReport, out_dir) -> list[Path]:
    """Write one CSV per dataset plus ``summary.json``; returns the paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = []
    for name, table in report.datasets.items():
        path = out / f"{name}.csv"
        table.to_csv(path)
        paths.append(path)
    summary = {
        "experiment": report.experiment,
        "fits": {k: v.as_dict() for k, v in report.fits.items()},
        "metrics": report.metrics,
        "config": report.config,
        "seed": report.seed,
    }
    spath = out / "summary.json"
    with open(spath, "w", newline="\n") as fh:
        json.dump(summary, fh, indent=2, sort_keys=True)
        fh.write("\n")
    paths.append(spath)
    return paths


def _map(fn, items, jobs: int):
    if jobs <= 1 or len(items) <= 1:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def _log_mean(values) -> float:
    return float(10.0 ** np.mean(np.log10(values)))


# --------------------------------------------------------------------------
# experiment runners

def _run_boundary_effect(cfg: dict, jobs: int):
    problem = make_deriv2(cfg["n"], solution=cfg["solution"])
    grid = np.logspace(np.log10(cfg["alpha_min"]), np.log10(cfg["alpha_max"]),
                       cfg["alpha_grid_size"])
    t = problem.grid
    metrics: dict[str, float] = {}
    recon_max = 0.0

    by_delta_cols = ["t", "x_true"]
    by_delta_vals = [t, problem.x_true]
    for delta in cfg["deltas"]:
        sample = add_noise(problem, delta, cfg["seed"])
        choice = alpha_oracle(problem, sample.y_delta, alpha_grid=grid)
        sol = tikhonov(problem, sample.y_delta, choice.alpha)
        recon_max = max(recon_max, sol.source_recon_rel)
        x_rec = sol.nodal(problem)
        tag = f"{delta:g}"
        by_delta_cols.append(f"x_rec_d{tag}")
        by_delta_vals.append(x_rec)
        metrics[f"alpha_d{tag}"] = choice.alpha
        metrics[f"boundary_ratio_d{tag}"] = float(
            max(abs(x_rec[0]), abs(x_rec[-1])) / np.max(np.abs(x_rec))
        )

    by_alpha_cols = ["t", "x_true"]
    by_alpha_vals = [t, problem.x_true]
    sample = add_noise(problem, cfg["delta_fixed"], cfg["seed"])
    for alpha in cfg["alphas_fixed"]:
        sol = tikhonov(problem, sample.y_delta, alpha)
        recon_max = max(recon_max, sol.source_recon_rel)
        x_rec = sol.nodal(problem)
        tag = f"{alpha:g}"
        by_alpha_cols.append(f"x_rec_a{tag}")
        by_alpha_vals.append(x_rec)
        metrics[f"boundary_ratio_a{tag}"] = float(
            max(abs(x_rec[0]), abs(x_rec[-1])) / np.max(np.abs(x_rec))
        )

    metrics["max_source_recon_rel"] = recon_max
    datasets = {
        "boundary_effect_by_delta": Table(
            tuple(by_delta_cols),
            [tuple(col[i] for col in by_delta_vals) for i in range(len(t))],
        ),
        "boundary_effect_by_alpha": Table(
            tuple(by_alpha_cols),
            [tuple(col[i] for col in by_alpha_vals) for i in range(len(t))],
        ),
    }
    return datasets, {}, metrics


_NU_TAGS = {0.0: "0", 0.5: "half"}


def _run_asc_curves(cfg: dict, jobs: int):
    grid = np.logspace(np.log10(cfg["r_min"]), np.log10(cfg["r_max"]),
                       cfg["r_points"])
    variants = {
        "plain": make_diagonal_model(cfg["n"], cfg["eta"], cfg["beta_decay"]),
        "leading": make_diagonal_model(cfg["n"], cfg["eta"], cfg["beta_decay"],
                                       leading_ones=cfg["leading_ones"]),
    }
    datasets = {}
    fits = {}
    metrics = {}

    def one(task):
        variant, nu = task
        problem = variants[variant]
        curve = distances.distance_curve(problem.op, problem.x_true, nu,
                                         cfg["kappa"], grid)
        return variant, nu, curve

    tasks = [(v, nu) for v in variants for nu in cfg["nus"]]
    for variant, nu, curve in _map(one, tasks, jobs):
        problem = variants[variant]
        flags = distances.classify_regimes(curve, problem.op)
        tag = _NU_TAGS.get(nu, f"{nu:g}")
        rows = [
            (p.R, p.d, p.lam, fl)
            for p, fl in zip(curve.points, flags)
        ]
        datasets[f"asc_curves_nu{tag}_{variant}"] = Table(
            ("R", "d", "lambda", "regime_flag"), rows
        )
        R, d, _ = curve.arrays()
        fits[f"slope_nu{tag}_{variant}"] = fit_rate(
            R, d, central_window(R.size, cfg["window_frac"])
        )
        mu = problem.mu_nominal
        metrics[f"theory_slope_nu{tag}"] = (mu + nu) / (mu - cfg["kappa"])
    return datasets, fits, metrics


def _run_discrete_asc(cfg: dict, jobs: int):
    datasets = {}
    fits = {}
    metrics = {}
    for n in cfg["levels"]:
        problem = make_diagonal_model(n, cfg["eta"], cfg["beta_decay"])
        op = problem.op
        sig = op.sigmas
        w_norm = float(np.linalg.norm(
            problem.x_true / sig ** (2.0 * (cfg["nu"] + cfg["kappa"]))
        ))
        grid = np.logspace(np.log10(cfg["r_min"]),
                           np.log10(cfg["r_margin"] * w_norm),
                           cfg["r_points"])
        curve = distances.distance_curve(op, problem.x_true, cfg["nu"],
                                         cfg["kappa"], grid)
        flags = distances.classify_regimes(curve, op)
        rows = [(p.R, p.d, p.lam, fl) for p, fl in zip(curve.points, flags)]
        datasets[f"discrete_asc_n{n}"] = Table(
            ("R", "d", "lambda", "regime_flag"), rows
        )
        pts = list(zip(curve.points, flags))
        asym = [(p.R, p.d) for p, fl in pts if fl == "asymptotic"]
        if len(asym) >= 4:
            R, d = map(np.array, zip(*asym))
            fits[f"asymptotic_n{n}"] = fit_rate(R, d,
                                                central_window(R.size, 0.2))
        inter = [(p.R, p.d) for p, fl in pts if fl == "wellposed" and p.d > 0]
        if len(inter) >= 2:
            R, d = map(np.array, zip(*inter))
            fits[f"intermediate_n{n}"] = fit_rate(R, d)
        floor = [p.d for p, fl in pts if fl == "floor"]
        metrics[f"w_norm_n{n}"] = w_norm
        if floor:
            metrics[f"floor_ratio_n{n}"] = float(min(floor) / curve.target_norm)
    return datasets, fits, metrics


def _run_source_growth(cfg: dict, jobs: int):
    problem = make_diagonal_model(cfg["n"], cfg["eta"], cfg["beta_decay"])
    alphas = np.logspace(np.log10(cfg["alpha_min"]), np.log10(cfg["alpha_max"]),
                         cfg["alpha_points"])
    sols = _map(lambda a: tikhonov(problem, problem.y_exact, a), list(alphas),
                jobs)
    rows = [(a, s.source_norm_half, s.residual_norm, s.error_norm)
            for a, s in zip(alphas, sols)]
    table = Table(("alpha", "xi_norm", "residual", "error"), rows)
    xi = np.array([s.source_norm_half for s in sols])

    def window(bounds):
        lo, hi = bounds
        idx = np.flatnonzero((alphas >= lo) & (alphas <= hi))
        return (int(idx[0]), int(idx[-1]) + 1)

    fits = {
        "presat_slope": fit_rate(alphas, xi, window(cfg["presat_window"])),
        "plateau_slope": fit_rate(alphas, xi, window(cfg["plateau_window"])),
    }
    metrics = {
        "max_source_recon_rel": max(s.source_recon_rel for s in sols),
        "theory_presat_slope": problem.mu_nominal - 0.5,
    }
    return {"source_growth": table}, fits, metrics


def _rate_study(problem: InverseProblem, cfg: dict, jobs: int, rules,
                solver, apriori_kwargs: dict):
    """Shared delta-sweep driver: rows per (delta, seed, rule) plus fits."""
    deltas = np.asarray(cfg["deltas"], dtype=float)
    seeds = [cfg["seed"] + j for j in range(cfg["n_seeds"])]
    recon_max = 0.0
    rows = []
    agg: dict[str, dict[str, list]] = {
        rule: {"delta": [], "alpha": [], "error": []} for rule in rules
    }

    def one(delta_rel):
        out = []
        for seed in seeds:
            sample = add_noise(problem, delta_rel, seed)
            for rule in rules:
                if rule == "apriori":
                    choice = alpha_apriori(sample.delta_abs, **apriori_kwargs)
                elif rule == "discrepancy":
                    choice = alpha_discrepancy(
                        problem, sample.y_delta, sample.delta_abs,
                        tau=cfg["tau"], solver=solver,
                        alpha_interval=tuple(cfg["alpha_interval"]),
                    )
                else:
                    raise ConfigurationError(f"unknown rule {rule!r}")
                sol = solver(problem, sample.y_delta, choice.alpha)
                out.append((sample.delta_abs, choice.alpha, sol.error_norm,
                            sol.residual_norm, rule, sol.source_recon_rel))
        return out

    for chunk in _map(one, list(deltas), jobs):
        for delta_abs, alpha, err, res, rule, recon in chunk:
            rows.append((delta_abs, alpha, err, res, rule))
            recon_max = max(recon_max, recon)

    for delta_abs, alpha, err, _res, rule in rows:
        agg[rule]["delta"].append(delta_abs)
        agg[rule]["alpha"].append(alpha)
        agg[rule]["error"].append(err)

    fits = {}
    for rule in rules:
        d = np.array(agg[rule]["delta"]).reshape(len(deltas), -1)
        a = np.array(agg[rule]["alpha"]).reshape(len(deltas), -1)
        e = np.array(agg[rule]["error"]).reshape(len(deltas), -1)
        dm = d[:, 0]
        em = np.array([_log_mean(row) for row in e])
        am = np.array([_log_mean(row) for row in a])
        fits[f"error_slope_{rule}"] = fit_rate(dm, em)
        fits[f"alpha_slope_{rule}"] = fit_rate(dm, am)
    return rows, fits, recon_max


def _run_rate_table(cfg: dict, jobs: int):
    problem = make_diagonal_model(cfg["n"], cfg["eta"], cfg["beta_decay"])
    mu = problem.mu_nominal
    rows, fits, recon_max = _rate_study(
        problem, cfg, jobs, cfg["rules"], tikhonov,
        {"mu": mu, "method": "classical", "c": cfg["c_apriori"]},
    )
    table = Table(("delta", "alpha", "error", "residual", "rule"), rows)
    metrics = {
        "max_source_recon_rel": recon_max,
        "theory_error_slope": 2 * mu / (2 * mu + 1),
        "theory_alpha_slope": 2 / (2 * mu + 1),
    }
    if {"apriori", "discrepancy"} <= set(cfg["rules"]):
        metrics["alpha_slope_agreement"] = abs(
            fits["alpha_slope_apriori"].slope
            - fits["alpha_slope_discrepancy"].slope
        )
    return {"rate_table": table}, fits, metrics


def _run_high_order_saturation(cfg: dict, jobs: int):
    kappa_order = cfg["kappa_order"]
    datasets = {}
    fits = {}
    metrics = {"kappa_order": float(kappa_order)}
    recon_max = 0.0

    def solver(problem, data, alpha):
        return tikhonov(problem, data, alpha, kappa_order=kappa_order)

    for mu in cfg["mus"]:
        beta_decay = (4.0 * cfg["eta"] * mu + 1.0) / 2.0
        problem = make_diagonal_model(cfg["n"], cfg["eta"], beta_decay)
        rows, _, recon = _rate_study(problem, cfg, jobs, ["discrepancy"],
                                     solver, {})
        recon_max = max(recon_max, recon)
        tag = f"{mu:g}"
        datasets[f"high_order_saturation_mu{tag}"] = Table(
            ("delta", "alpha", "error", "residual", "rule"), rows
        )
        lo, hi = cfg["fit_windows"][str(mu)]
        deltas = np.array([r[0] for r in rows])
        errors = np.array([r[2] for r in rows])
        # aggregate per delta in log space, then fit on the window
        uniq = np.unique(deltas)
        em = np.array([_log_mean(errors[deltas == d]) for d in uniq])
        rel = uniq / np.linalg.norm(problem.y_exact)
        idx = np.flatnonzero((rel >= 0.999 * lo) & (rel <= 1.001 * hi))
        fits[f"rate_mu{tag}"] = fit_rate(uniq[idx], em[idx])
        metrics[f"theory_rate_mu{tag}"] = 2 * mu / (2 * mu + 1)
    metrics["max_source_recon_rel"] = recon_max
    return datasets, fits, metrics


def _run_oversmoothing_rate(cfg: dict, jobs: int):
    problem = make_hilbert_scale_model(cfg["n"], cfg["a"], cfg["p"],
                                       s_hint=cfg["s"])
    s = cfg["s"]

    def solver(prob, data, alpha):
        return tikhonov_hilbert_scale(prob, data, alpha, s)

    rows, fits, recon_max = _rate_study(
        problem, cfg, jobs, cfg["rules"], solver,
        {"mu": problem.mu_nominal, "method": "hilbert", "c": cfg["c_apriori"],
         "a": cfg["a"], "p": cfg["p"], "s": s},
    )
    table = Table(("delta", "alpha", "error", "residual", "rule"), rows)
    i = np.arange(1, cfg["n"] + 1, dtype=float)
    pen_full = float(np.sum(i ** (2.0 * s) * problem.x_true**2))
    half = cfg["n"] // 2
    pen_half = float(np.sum(i[:half] ** (2.0 * s) * problem.x_true[:half] ** 2))
    metrics = {
        "max_source_recon_rel": recon_max,
        "theory_error_slope": cfg["p"] / (cfg["a"] + cfg["p"]),
        "theory_alpha_exponent": 2 * (s + cfg["a"]) / (cfg["a"] + cfg["p"]),
        "xdag_penalty_growth": pen_full / pen_half,
    }
    return {"oversmoothing_rate": table}, fits, metrics


def _compare_on_overlap(wT, eT, wL, eL, grid_points: int) -> float:
    """Sup of the symmetric relative gap between log-log interpolants."""
    lo = max(np.min(wT), np.min(wL))
    hi = min(np.max(wT), np.max(wL))
    if not hi > lo:
        raise ConfigurationError("curves have no overlapping source-norm range")
    grid = np.linspace(np.log(lo) + 1e-9, np.log(hi) - 1e-9, grid_points)
    fT = np.interp(grid, np.log(wT), np.log(eT))
    fL = np.interp(grid, np.log(wL), np.log(eL))
    return float(np.max(np.exp(np.abs(fT - fL)) - 1.0))


def _run_landweber_vs_tikhonov(cfg: dict, jobs: int):
    problem = make_diagonal_model(cfg["n"], cfg["eta"], cfg["beta_decay"])
    datasets = {}
    metrics = {}
    recon_max = 0.0
    cases = [("noisefree", 0.0), ("noisy", cfg["delta_rel"])]
    for tag, delta in cases:
        sample = add_noise(problem, delta, cfg["seed"])
        data = sample.y_delta
        alphas = [cfg["alpha_base"] ** j
                  for j in range(1, cfg["alpha_count"] + 1)]
        rows = []
        wT, eT = [], []
        for alpha in alphas:
            sol = tikhonov(problem, data, alpha)
            recon_max = max(recon_max, sol.source_recon_rel)
            rows.append(("tikhonov", sol.source_norm_half, sol.error_norm,
                         sol.residual_norm, alpha))
            wT.append(sol.source_norm_half)
            eT.append(sol.error_norm)
        sols = landweber(problem, data, cfg["beta"], cfg["k_max"])
        wL = [s.source_norm_half for s in sols]
        eL = [s.error_norm for s in sols]
        for s in sols:
            rows.append(("landweber", s.source_norm_half, s.error_norm,
                         s.residual_norm, s.iteration))
        datasets[f"landweber_vs_tikhonov_{tag}"] = Table(
            ("method", "w_norm", "error", "residual", "alpha_or_k"), rows
        )
        metrics[f"sup_rel_deviation_{tag}"] = _compare_on_overlap(
            np.array(wT), np.array(eT), np.array(wL), np.array(eL),
            cfg["grid_points"],
        )
    metrics["max_source_recon_rel"] = recon_max
    return datasets, {}, metrics


def saturation_probe(problem: InverseProblem, alpha_grid):
    """Tabulate residual/alpha and error/alpha over a grid, noise-free.

    Returns the table and a metrics dict with the min/max of both ratios
    and their total growth from the largest to the smallest alpha.
    """
    alphas = np.sort(np.asarray(alpha_grid, dtype=float))
    if alphas.size == 0 or alphas[0] <= 0:
        raise ConfigurationError("alpha_grid must be positive")
    rows = []
    res_ratio = []
    err_ratio = []
    for alpha in alphas:
        sol = tikhonov(problem, problem.y_exact, alpha)
        rr = sol.residual_norm / alpha
        er = sol.error_norm / alpha
        rows.append((alpha, sol.residual_norm, sol.error_norm, rr, er))
        res_ratio.append(rr)
        err_ratio.append(er)
    table = Table(
        ("alpha", "residual", "error", "residual_over_alpha",
         "error_over_alpha"), rows
    )
    metrics = {
        "residual_ratio_min": float(np.min(res_ratio)),
        "residual_ratio_max": float(np.max(res_ratio)),
        "error_ratio_min": float(np.min(err_ratio)),
        "error_ratio_max": float(np.max(err_ratio)),
        "residual_ratio_growth": float(res_ratio[0] / res_ratio[-1]),
        "error_ratio_growth": float(err_ratio[0] / err_ratio[-1]),
    }
    return table, metrics


# --------------------------------------------------------------------------
# registry

_DEFAULTS: dict[str, dict] = {
    "boundary_effect": {
        "n": 64, "solution": "constant_one",
        "deltas": [0.0, 0.0005, 0.005, 0.05],
        "alpha_min": 1e-10, "alpha_max": 1.0, "alpha_grid_size": 300,
        "alphas_fixed": [1e-2, 1e-4, 1e-6, 1e-8], "delta_fixed": 0.005,
        "seed": 42,
    },
    "asc_curves": {
        "n": 5000, "eta": 2.0, "beta_decay": 2.0, "leading_ones": 8,
        "kappa": 0.5, "nus": [0.0, 0.5],
        "r_min": 2.0, "r_max": 40.0, "r_points": 40, "window_frac": 0.2,
        "seed": 42,
    },
    "discrete_asc": {
        "levels": [20, 100, 1000], "eta": 2.0, "beta_decay": 2.0,
        "nu": 0.0, "kappa": 0.5,
        "r_min": 0.2, "r_margin": 1.5, "r_points": 45,
        "seed": 42,
    },
    "source_growth": {
        "n": 500, "eta": 2.0, "beta_decay": 2.0,
        "alpha_min": 1e-16, "alpha_max": 1.0, "alpha_points": 81,
        "presat_window": [1e-8, 1e-2], "plateau_window": [1e-16, 1e-12],
        "seed": 42,
    },
    "rate_table": {
        "n": 5000, "eta": 2.0, "beta_decay": 2.0,
        "deltas": list(np.logspace(-2, -5, 7)),
        "n_seeds": 5, "tau": 1.5, "c_apriori": 1.0,
        "alpha_interval": [1e-14, 1e2],
        "rules": ["apriori", "discrepancy"],
        "seed": 42,
    },
    "high_order_saturation": {
        "n": 50, "eta": 2.0, "kappa_order": 1,
        "mus": [0.25, 1.25, 2.25, 3.25],
        "deltas": list(np.logspace(-2, -9, 15)),
        "n_seeds": 5, "tau": 1.5,
        "alpha_interval": [1e-18, 1e2],
        "fit_windows": {
            "0.25": [1e-5, 1e-2], "1.25": [1e-9, 1e-2],
            "2.25": [1e-9, 1e-4], "3.25": [1e-9, 1e-4],
        },
        "seed": 42,
    },
    "oversmoothing_rate": {
        "n": 2000, "a": 1.0, "p": 1.0, "s": 2.0,
        "deltas": list(np.logspace(-2, -5, 7)),
        "n_seeds": 5, "tau": 1.5, "c_apriori": 1.0,
        "alpha_interval": [1e-14, 1e2],
        "rules": ["apriori", "discrepancy"],
        "seed": 42,
    },
    "landweber_vs_tikhonov": {
        "n": 5000, "eta": 2.0, "beta_decay": 2.0,
        "delta_rel": 0.001, "alpha_base": 0.7, "alpha_count": 60,
        "beta": 1.0, "k_max": 50000, "grid_points": 60,
        "seed": 42,
    },
}

_RUNNERS = {
    "boundary_effect": _run_boundary_effect,
    "asc_curves": _run_asc_curves,
    "discrete_asc": _run_discrete_asc,
    "source_growth": _run_source_growth,
    "rate_table": _run_rate_table,
    "high_order_saturation": _run_high_order_saturation,
    "oversmoothing_rate": _run_oversmoothing_rate,
    "landweber_vs_tikhonov": _run_landweber_vs_tikhonov,
}

EXPERIMENT_NAMES = tuple(sorted(_RUNNERS))


def default_config(name: str) -> dict:
    if name not in _DEFAULTS:
        raise ConfigurationError(
            f"unknown experiment {name!r}; choose from {EXPERIMENT_NAMES}"
        )
    return json.loads(json.dumps(_DEFAULTS[name]))


def run_experiment(name: str, config: dict | None = None,
                   jobs: int = 1) -> ExperimentReport:
    """Run one named experiment and return its report.

    ``config`` overrides the experiment's defaults; unknown keys are
    rejected before any computation starts.
    """
    cfg = default_config(name)
    if config:
        unknown = set(config) - set(cfg)
        if unknown:
            raise ConfigurationError(
                f"unknown config keys for {name}: {sorted(unknown)}"
            )
        cfg.update(config)
    if jobs < 1:
        raise ConfigurationError("jobs must be >= 1")
    datasets, fits, metrics = _RUNNERS[name](cfg, jobs)
    return ExperimentReport(experiment=name, datasets=datasets, fits=fits,
                            metrics=metrics, config=cfg, seed=cfg["seed"])
