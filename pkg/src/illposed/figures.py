"""Render experiment reports as matplotlib figures next to the CSV output."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .experiments import ExperimentReport, Table

__all__ = ["render_report"]

plt.rcParams.update({
    "figure.figsize": (6.4, 4.2),
    "font.size": 9,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "lines.linewidth": 1.2,
})


def _save(fig, out_dir: Path, name: str) -> Path:
    path = out_dir / f"{name}.png"
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path


def _plot_profiles(table: Table, ax, prefix: str):
    t = np.array(table.column("t"))
    ax.plot(t, table.column("x_true"), "k--", label="x_true")
    for col in table.columns:
        if col.startswith(prefix):
            ax.plot(t, table.column(col), label=col[len("x_rec_"):])
    ax.set_xlabel("t")
    ax.set_ylabel("reconstruction")
    ax.legend(fontsize=7)


def _render_boundary_effect(report, out_dir):
    fig, axes = plt.subplots(2, 1, figsize=(6.4, 7.2))
    _plot_profiles(report.datasets["boundary_effect_by_delta"], axes[0],
                   "x_rec_d")
    axes[0].set_title("oracle parameter per noise level")
    _plot_profiles(report.datasets["boundary_effect_by_alpha"], axes[1],
                   "x_rec_a")
    axes[1].set_title("fixed noise level, several parameters")
    return [_save(fig, out_dir, "boundary_effect")]


def _loglog_curve(ax, table: Table, label: str):
    R = np.array(table.column("R"))
    d = np.array(table.column("d"))
    ok = d > 0
    ax.loglog(R[ok], d[ok], "o-", ms=2.5, label=label)


def _render_asc_curves(report, out_dir):
    fig, axes = plt.subplots(1, 2, figsize=(9.2, 4.0), sharey=True)
    for name, table in report.datasets.items():
        ax = axes[0] if name.endswith("plain") else axes[1]
        _loglog_curve(ax, table, name.split("asc_curves_")[1])
    for ax, title in zip(axes, ("plain coefficients", "leading ones")):
        ax.set_xlabel("R")
        ax.set_title(title)
        ax.legend(fontsize=7)
    axes[0].set_ylabel("d(R)")
    return [_save(fig, out_dir, "asc_curves")]


def _render_discrete_asc(report, out_dir):
    fig, ax = plt.subplots()
    for name, table in report.datasets.items():
        _loglog_curve(ax, table, name.split("discrete_asc_")[1])
    ax.set_xlabel("R")
    ax.set_ylabel("d(R)")
    ax.set_title("distance curves across discretization levels")
    ax.legend(fontsize=7)
    return [_save(fig, out_dir, "discrete_asc")]


def _render_source_growth(report, out_dir):
    table = report.datasets["source_growth"]
    fig, ax = plt.subplots()
    ax.loglog(table.column("alpha"), table.column("xi_norm"), "o-", ms=2.5)
    ax.set_xlabel("alpha")
    ax.set_ylabel("source element norm")
    fit = report.fits["presat_slope"]
    ax.set_title(f"pre-saturation slope {fit.slope:.4f}")
    return [_save(fig, out_dir, "source_growth")]


def _render_rate_rows(table: Table, ax):
    rules = sorted(set(table.column("rule")))
    deltas = np.array(table.column("delta"))
    errors = np.array(table.column("error"))
    rule_col = np.array(table.column("rule"))
    for rule in rules:
        m = rule_col == rule
        ax.loglog(deltas[m], errors[m], "o", ms=3, alpha=0.6, label=rule)
    ax.set_xlabel("delta")
    ax.set_ylabel("error")
    ax.legend(fontsize=7)


def _render_rate_table(report, out_dir):
    fig, ax = plt.subplots()
    _render_rate_rows(report.datasets["rate_table"], ax)
    ax.set_title("error versus noise level")
    return [_save(fig, out_dir, "rate_table")]


def _render_high_order(report, out_dir):
    fig, ax = plt.subplots()
    for name, table in sorted(report.datasets.items()):
        deltas = np.array(table.column("delta"))
        errors = np.array(table.column("error"))
        ax.loglog(deltas, errors, "o", ms=3, alpha=0.6,
                  label=name.split("saturation_")[1])
    ax.set_xlabel("delta")
    ax.set_ylabel("error")
    ax.set_title("higher-order filter with discrepancy principle")
    ax.legend(fontsize=7)
    return [_save(fig, out_dir, "high_order_saturation")]


def _render_oversmoothing(report, out_dir):
    fig, ax = plt.subplots()
    _render_rate_rows(report.datasets["oversmoothing_rate"], ax)
    ax.set_title("oversmoothing penalty, error versus noise level")
    return [_save(fig, out_dir, "oversmoothing_rate")]


def _render_landweber(report, out_dir):
    fig, axes = plt.subplots(2, 2, figsize=(9.2, 7.2))
    for row, tag in enumerate(("noisefree", "noisy")):
        table = report.datasets[f"landweber_vs_tikhonov_{tag}"]
        method = np.array(table.column("method"))
        w = np.array(table.column("w_norm"))
        for col, quantity in enumerate(("error", "residual")):
            vals = np.array(table.column(quantity))
            ax = axes[row, col]
            for m, style in (("tikhonov", "k--"), ("landweber", "r-")):
                sel = method == m
                ax.loglog(w[sel], vals[sel], style, label=m)
            ax.set_xlabel("source norm")
            ax.set_ylabel(quantity)
            ax.set_title(f"{tag} {quantity}")
            ax.legend(fontsize=7)
    return [_save(fig, out_dir, "landweber_vs_tikhonov")]


_RENDERERS = {
    "boundary_effect": _render_boundary_effect,
    "asc_curves": _render_asc_curves,
    "discrete_asc": _render_discrete_asc,
    "source_growth": _render_source_growth,
    "rate_table": _render_rate_table,
    "high_order_saturation": _render_high_order,
    "oversmoothing_rate": _render_oversmoothing,
    "landweber_vs_tikhonov": _render_landweber,
}


def render_report(report: ExperimentReport, out_dir) -> list[Path]:
    """Render the figures for a report; returns the written paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    return _RENDERERS[report.experiment](report, out)
