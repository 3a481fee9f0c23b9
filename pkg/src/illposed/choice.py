"""Regularization-parameter selection rules.

Three rules: the a-priori power law keyed to the smoothness index, the
discrepancy principle (largest parameter whose residual stays within a
multiple of the noise level), and an oracle that minimizes the true error
over a grid.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .exceptions import ConfigurationError, NoCrossingError
from .problems import InverseProblem
from .regularizers import RegularizedSolution, tikhonov

__all__ = ["ChoiceResult", "alpha_apriori", "alpha_discrepancy", "alpha_oracle"]

Solver = Callable[[InverseProblem, np.ndarray, float], RegularizedSolution]


@dataclass(frozen=True)
class ChoiceResult:
    alpha: float
    rule: str
    tau: float | None = None
    diagnostics: dict = field(default_factory=dict)


def alpha_apriori(delta_abs: float, mu: float, method: str = "classical",
                  c: float = 1.0, kappa_order: int = 0,
                  a: float | None = None, p: float | None = None,
                  s: float | None = None) -> ChoiceResult:
    """A-priori parameter ``alpha = c * delta^e`` with the method's exponent.

    Exponents: ``2/(2 mu + 1)`` for the classical filter,
    ``(2 kappa_order + 2)/(2 mu + 1)`` for the higher-order filter, and
    ``2 (s + a)/(a + p)`` for the Hilbert-scale penalty.
    """
    if delta_abs <= 0:
        raise ConfigurationError("delta_abs must be positive")
    if c <= 0:
        raise ConfigurationError("c must be positive")
    if method == "classical":
        if not 0 < mu <= 1:
            raise ConfigurationError(
                f"classical rule needs 0 < mu <= 1, got mu={mu}"
            )
        exponent = 2.0 / (2.0 * mu + 1.0)
    elif method == "high_order":
        if kappa_order < 0:
            raise ConfigurationError("kappa_order must be nonnegative")
        if not 0 < mu < kappa_order + 1:
            raise ConfigurationError(
                f"high_order rule needs 0 < mu < kappa_order + 1 = "
                f"{kappa_order + 1}, got mu={mu}"
            )
        exponent = (2.0 * kappa_order + 2.0) / (2.0 * mu + 1.0)
    elif method == "hilbert":
        if a is None or p is None or s is None:
            raise ConfigurationError("hilbert rule needs a, p, s")
        if p > 2 * s + a:
            raise ConfigurationError(
                f"admissibility p <= 2s + a violated: {p} > {2 * s + a}"
            )
        exponent = 2.0 * (s + a) / (a + p)
    else:
        raise ConfigurationError(f"unknown method {method!r}")
    alpha = c * delta_abs**exponent
    return ChoiceResult(alpha=float(alpha), rule="apriori",
                        diagnostics={"exponent": exponent, "c": c})


def alpha_discrepancy(problem: InverseProblem, data: np.ndarray,
                      delta_abs: float, tau: float = 1.5,
                      solver: Solver | None = None,
                      alpha_interval: tuple[float, float] = (1e-14, 1e2),
                      rtol: float = 1e-3) -> ChoiceResult:
    """Largest ``alpha`` with residual at most ``tau * delta_abs``.

    Uses bisection on ``log alpha``; the residual of the Tikhonov filter is
    non-decreasing in ``alpha``, so the crossing is unique.  Requires the
    residual to be below the target at the lower interval end and above it
    at the upper end (otherwise the upper end itself is feasible and is
    returned).
    """
    if delta_abs <= 0:
        raise ConfigurationError(
            "discrepancy principle is undefined for noise-free data "
            "(delta_abs must be positive)"
        )
    if tau <= 1:
        raise ConfigurationError("tau must exceed 1")
    lo, hi = alpha_interval
    if not 0 < lo < hi:
        raise ConfigurationError("invalid alpha_interval")
    if solver is None:
        solver = tikhonov
    target = tau * delta_abs

    def residual(alpha: float) -> float:
        return solver(problem, data, alpha).residual_norm

    if residual(hi) <= target:
        sol = solver(problem, data, hi)
        return ChoiceResult(alpha=float(hi), rule="discrepancy", tau=tau,
                            diagnostics={"residual": sol.residual_norm,
                                         "at_bound": "upper"})
    if residual(lo) > target:
        raise NoCrossingError(
            f"residual at alpha={lo} already exceeds tau*delta={target}; "
            "noise level too small or interval too short"
        )
    for _ in range(200):
        mid = float(np.sqrt(lo * hi))
        if residual(mid) <= target:
            lo = mid
        else:
            hi = mid
        if hi / lo <= 1.0 + rtol:
            break
    sol = solver(problem, data, lo)
    return ChoiceResult(alpha=float(lo), rule="discrepancy", tau=tau,
                        diagnostics={"residual": sol.residual_norm})


def alpha_oracle(problem: InverseProblem, data: np.ndarray,
                 x_true: np.ndarray | None = None,
                 solver: Solver | None = None,
                 alpha_grid=None) -> ChoiceResult:
    """Grid parameter minimizing the true error; ties go to the larger alpha."""
    if alpha_grid is None or len(alpha_grid) == 0:
        raise ConfigurationError("alpha_grid must be non-empty")
    if solver is None:
        solver = tikhonov
    op = problem.op
    if x_true is None:
        x_true = problem.x_true
    xt_v = op.domain_coefs(x_true)
    perp_sq = float(np.sum(op.domain_perp(np.asarray(x_true, float)) ** 2))
    best = None
    for alpha in sorted(float(a) for a in alpha_grid):
        sol = solver(problem, data, alpha)
        err = float(np.sqrt(np.sum((sol.coefs - xt_v) ** 2) + perp_sq))
        if best is None or err <= best[0]:
            best = (err, alpha, sol.residual_norm)
    err, alpha, res = best
    return ChoiceResult(alpha=alpha, rule="oracle",
                        diagnostics={"error": err, "residual": res})
