"""Spectral-filter regularizers and their source-element bookkeeping.

Tikhonov solutions (classical, higher-order, Hilbert-scale penalty) are
computed as filter factors on the singular system.  Every solution records,
besides residual and error norms, the norm of the data-space source element
``xi`` through which the solution factors as ``x = A* xi`` (suitably
generalized for the non-classical variants), together with the relative
reconstruction defect of that representation.  Landweber iteration is
evaluated in summed form at checkpoint indices and tracks the same source
element.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import ConfigurationError
from .operators import SingularSystem
from .problems import InverseProblem

__all__ = [
    "RegularizedSolution",
    "tikhonov",
    "tikhonov_hilbert_scale",
    "landweber",
    "landweber_checkpoints",
    "source_element",
]


@dataclass(frozen=True)
class RegularizedSolution:
    """A regularized solution in spectral (``v``) coordinates.

    ``source_norm_half`` is the norm of the data-space element ``xi`` with
    ``x = A* xi``; ``source_norm_one`` the norm of the domain element with
    ``x = A*A xi`` (available for noise-free data only).
    ``source_recon_rel`` is the relative defect ``||A* xi - x|| / ||x||`` of
    the recorded half representation.
    """

    coefs: np.ndarray
    alpha: float | None
    residual_norm: float
    iteration: int | None = None
    error_norm: float | None = None
    source_norm_half: float | None = None
    source_norm_one: float | None = None
    source_recon_rel: float | None = None
    kappa_order: int = 0
    hilbert_s: float | None = None

    def nodal(self, problem: InverseProblem) -> np.ndarray:
        """Solution in the problem's natural (nodal or spectral) coordinates."""
        return problem.op.from_domain_coefs(self.coefs)


def _check_data(op: SingularSystem, data: np.ndarray) -> np.ndarray:
    data = np.asarray(data, dtype=float)
    if data.ndim != 1 or data.size != op.dim_data:
        raise ConfigurationError(
            f"data length {data.size} does not match data dimension {op.dim_data}"
        )
    if not np.all(np.isfinite(data)):
        raise ConfigurationError("data has non-finite entries")
    return data


def _error_norm(problem: InverseProblem, x_v: np.ndarray) -> float:
    op = problem.op
    xt_v = op.domain_coefs(problem.x_true)
    perp = op.domain_perp(problem.x_true)
    return float(np.sqrt(np.sum((x_v - xt_v) ** 2) + np.sum(perp**2)))


def _is_noise_free(problem: InverseProblem, data: np.ndarray) -> bool:
    return data.shape == problem.y_exact.shape and np.array_equal(
        data, problem.y_exact
    )


def tikhonov(problem: InverseProblem, data: np.ndarray, alpha: float,
             kappa_order: int = 0) -> RegularizedSolution:
    """Tikhonov solution of order ``kappa_order`` as a spectral filter.

    The coefficient against ``v_i`` is
    ``sigma_i^(2 kappa + 1) / (sigma_i^(2 kappa + 2) + alpha) * <y, u_i>``;
    ``kappa_order = 0`` is the classical filter ``sigma/(sigma^2 + alpha)``.
    """
    if alpha <= 0:
        raise ConfigurationError("alpha must be positive")
    if kappa_order < 0 or int(kappa_order) != kappa_order:
        raise ConfigurationError("kappa_order must be a nonnegative integer")
    kappa_order = int(kappa_order)
    op = problem.op
    data = _check_data(op, data)
    sig = op.sigmas
    d_u = op.data_coefs(data)
    perp = op.data_perp(data)
    perp_sq = float(np.sum(perp**2))

    denom = sig ** (2 * kappa_order + 2) + alpha
    x_v = sig ** (2 * kappa_order + 1) / denom * d_u
    # closed-form residual coefficients: d - sigma x = alpha d / denom;
    # evaluating the subtraction directly cancels catastrophically for
    # alpha far below sigma^2
    res_u = alpha * d_u / denom
    residual = float(np.sqrt(np.sum(res_u**2) + perp_sq))

    # source element xi with x = A* xi; for order kappa the optimality
    # condition gives xi = (A A*)^kappa (y - A x)/alpha
    xi_u = sig ** (2 * kappa_order) * res_u / alpha
    xi_sq = float(np.sum(xi_u**2))
    if kappa_order == 0:
        xi_sq += perp_sq / alpha**2
    recon = sig * xi_u
    nx = np.linalg.norm(x_v)
    recon_rel = float(np.linalg.norm(recon - x_v) / nx) if nx > 0 else 0.0

    source_one = None
    if _is_noise_free(problem, data):
        # noise-free: x_true - x = alpha x_true / denom, cancellation-free
        xt_v = op.domain_coefs(problem.x_true)
        xi_one = sig ** (2 * kappa_order) * xt_v / denom
        one_sq = float(np.sum(xi_one**2))
        if kappa_order == 0:
            one_sq += float(np.sum(op.domain_perp(problem.x_true) ** 2)) / alpha**2
        source_one = float(np.sqrt(one_sq))

    return RegularizedSolution(
        coefs=x_v,
        alpha=float(alpha),
        residual_norm=residual,
        error_norm=_error_norm(problem, x_v),
        source_norm_half=float(np.sqrt(xi_sq)),
        source_norm_one=source_one,
        source_recon_rel=recon_rel,
        kappa_order=kappa_order,
    )


def tikhonov_hilbert_scale(problem: InverseProblem, data: np.ndarray,
                           alpha: float, s: float) -> RegularizedSolution:
    """Tikhonov solution with weighted penalty of scale order ``s``.

    The filter is ``sigma_i / (sigma_i^2 + alpha t_i^(2s))`` with the
    problem's Hilbert-scale weights ``t_i``; ``s = 0`` coincides with the
    classical filter.
    """
    if alpha <= 0:
        raise ConfigurationError("alpha must be positive")
    if s < 0:
        raise ConfigurationError("s must be nonnegative")
    if problem.hilbert_weights is None:
        raise ConfigurationError("problem has no hilbert_weights")
    op = problem.op
    data = _check_data(op, data)
    sig = op.sigmas
    t = problem.hilbert_weights
    d_u = op.data_coefs(data)
    perp_sq = float(np.sum(op.data_perp(data) ** 2))

    weight = alpha * t ** (2.0 * s)
    denom = sig**2 + weight
    x_v = sig / denom * d_u
    res_u = weight * d_u / denom  # d - sigma x, cancellation-free
    residual = float(np.sqrt(np.sum(res_u**2) + perp_sq))

    # optimality: x = T^(-2s) A* xi with xi = (y - A x)/alpha
    xi_u = res_u / alpha
    xi_sq = float(np.sum(xi_u**2)) + perp_sq / alpha**2
    recon = t ** (-2.0 * s) * sig * xi_u
    nx = np.linalg.norm(x_v)
    recon_rel = float(np.linalg.norm(recon - x_v) / nx) if nx > 0 else 0.0

    return RegularizedSolution(
        coefs=x_v,
        alpha=float(alpha),
        residual_norm=residual,
        error_norm=_error_norm(problem, x_v),
        source_norm_half=float(np.sqrt(xi_sq)),
        source_recon_rel=recon_rel,
        hilbert_s=float(s),
    )


def _geom_powers(c: np.ndarray, k: int) -> tuple[np.ndarray, np.ndarray]:
    """Stable ``(1 - (1-c)^k, (1-c)^k)`` for ``c`` in ``(0, 2)``."""
    q = np.empty_like(c)
    comp = np.empty_like(c)
    small = c < 1.0
    log_term = k * np.log1p(-c[small])
    q[small] = -np.expm1(log_term)
    comp[small] = np.exp(log_term)
    comp[~small] = (1.0 - c[~small]) ** k
    q[~small] = 1.0 - comp[~small]
    return q, comp


def landweber_checkpoints(k_max: int) -> list[int]:
    """Geometric checkpoint indices 1, 2, 4, ... plus ``k_max`` itself."""
    ks = []
    k = 1
    while k < k_max:
        ks.append(k)
        k *= 2
    ks.append(k_max)
    return ks


def landweber(problem: InverseProblem, data: np.ndarray, beta: float,
              k_max: int, x0: np.ndarray | None = None,
              checkpoints: list[int] | None = None,
              track_source: bool = True) -> list[RegularizedSolution]:
    """Landweber iterates at checkpoint indices, in summed form.

    The iteration ``x_{k+1} = x_k - beta A*(A x_k - y)`` is evaluated via
    its summed representation ``x_k = x0 + A* w_k`` with
    ``w_k = beta * sum_{i<k} (I - beta A A*)^i (y - A x0)``, which is exact
    and lets checkpoints be computed directly.  ``track_source`` records
    ``||w_k||`` in ``source_norm_half``.
    """
    op = problem.op
    data = _check_data(op, data)
    sig = op.sigmas
    if not 0 < beta < 2.0 / sig[0] ** 2:
        raise ConfigurationError("beta must satisfy 0 < beta < 2/sigma_1^2")
    if k_max < 1:
        raise ConfigurationError("k_max must be >= 1")
    if x0 is None:
        x0 = np.zeros(op.dim_domain)
    else:
        x0 = np.asarray(x0, dtype=float)
        if x0.size != op.dim_domain:
            raise ConfigurationError("x0 length does not match domain dimension")
    if checkpoints is None:
        checkpoints = landweber_checkpoints(k_max)
    if any(k < 1 or k > k_max for k in checkpoints):
        raise ConfigurationError("checkpoints must lie in [1, k_max]")

    x0_v = op.domain_coefs(x0)
    x0_perp = op.domain_perp(x0)
    xt_v = op.domain_coefs(problem.x_true)
    xt_perp = op.domain_perp(problem.x_true)
    err_perp_sq = float(np.sum((x0_perp - xt_perp) ** 2))

    d_u = op.data_coefs(data)
    r0_u = d_u - sig * x0_v
    r0_perp_sq = float(np.sum(op.data_perp(data) ** 2))
    c = beta * sig**2

    out = []
    for k in checkpoints:
        q, comp = _geom_powers(c, k)
        x_v = x0_v + q / sig * r0_u
        res_u = comp * r0_u  # d - sigma x_k = (1 - beta sigma^2)^k r0
        residual = float(np.sqrt(np.sum(res_u**2) + r0_perp_sq))
        error = float(np.sqrt(np.sum((x_v - xt_v) ** 2) + err_perp_sq))
        w_norm = None
        recon_rel = None
        if track_source:
            w_u = q / sig**2 * r0_u
            w_norm = float(np.sqrt(np.sum(w_u**2) + (beta * k) ** 2 * r0_perp_sq))
            recon = x0_v + sig * w_u
            nx = np.linalg.norm(x_v)
            recon_rel = float(np.linalg.norm(recon - x_v) / nx) if nx > 0 else 0.0
        out.append(
            RegularizedSolution(
                coefs=x_v,
                alpha=None,
                iteration=k,
                residual_norm=residual,
                error_norm=error,
                source_norm_half=w_norm,
                source_recon_rel=recon_rel,
            )
        )
    return out


def source_element(problem: InverseProblem, sol: RegularizedSolution,
                   data: np.ndarray,
                   representation: str = "half") -> tuple[np.ndarray, float]:
    """Source element of a Tikhonov solution and its norm.

    ``representation="half"`` returns the data-space ``xi`` with
    ``x = A* xi``, i.e. ``(y - A x)/alpha`` for the classical filter and its
    ``(A A*)^kappa``-smoothed analogue for higher orders.
    ``representation="one"`` returns the domain element with
    ``x = A*A xi``, i.e. ``(x_true - x)/alpha``; it requires noise-free data.
    """
    if representation not in ("half", "one"):
        raise ConfigurationError("representation must be 'half' or 'one'")
    if sol.alpha is None:
        raise ConfigurationError(
            "source_element needs an alpha-based solution; Landweber tracks "
            "its source element via track_source"
        )
    op = problem.op
    data = _check_data(op, data)
    sig = op.sigmas
    alpha = sol.alpha
    kappa = sol.kappa_order

    d_u = op.data_coefs(data)
    if representation == "half":
        # cancellation-free residual coefficients per filter family
        if sol.hilbert_s is not None:
            kappa = 0
            weight = alpha * problem.hilbert_weights ** (2.0 * sol.hilbert_s)
            res_u = weight * d_u / (sig**2 + weight)
        else:
            res_u = alpha * d_u / (sig ** (2 * kappa + 2) + alpha)
        xi_u = sig ** (2 * kappa) * res_u / alpha
        xi = op.from_data_coefs(xi_u)
        norm_sq = float(np.sum(xi_u**2))
        if kappa == 0:
            perp = op.data_perp(data) / alpha
            xi = xi + perp
            norm_sq += float(np.sum(perp**2))
        return xi, float(np.sqrt(norm_sq))

    if sol.hilbert_s is not None:
        raise ConfigurationError(
            "representation 'one' is not defined for the Hilbert-scale filter"
        )
    if not _is_noise_free(problem, data):
        raise ConfigurationError("representation 'one' requires noise-free data")
    xt_v = op.domain_coefs(problem.x_true)
    xi_v = sig ** (2 * kappa) * xt_v / (sig ** (2 * kappa + 2) + alpha)
    xi = op.from_domain_coefs(xi_v)
    norm_sq = float(np.sum(xi_v**2))
    if kappa == 0:
        perp = op.domain_perp(problem.x_true) / alpha
        xi = xi + perp
        norm_sq += float(np.sum(perp**2))
    return xi, float(np.sqrt(norm_sq))
