"""Test-problem generators and the relative Gaussian noise model.

Three families are provided: the second-derivative Fredholm problem
(``deriv2``) discretized by midpoint collocation, diagonal model operators
with power-law spectra and coefficient decay chosen to realize a prescribed
smoothness index, and a diagonal Hilbert-scale model whose weighted norms
are exact by construction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import ConfigurationError
from .operators import SingularSystem, apply, build_svd_operator

__all__ = [
    "InverseProblem",
    "NoisySample",
    "make_deriv2",
    "make_diagonal_model",
    "make_hilbert_scale_model",
    "add_noise",
    "deriv2_kernel",
]


@dataclass(frozen=True)
class InverseProblem:
    """A forward operator with known exact solution and exact data.

    ``x_true`` and ``y_exact`` are nodal samples for dense operators and
    spectral coefficients for diagonal ones.  ``mu_nominal`` records the
    smoothness index targeted by the construction, when there is one.
    ``hilbert_weights`` holds the eigenvalues of the scale-generating
    operator for Hilbert-scale models and is ``None`` otherwise.
    """

    op: SingularSystem
    x_true: np.ndarray
    y_exact: np.ndarray
    mu_nominal: float | None = None
    hilbert_weights: np.ndarray | None = None
    grid: np.ndarray | None = None
    s_hint: float | None = None

    def __post_init__(self):
        for name in ("x_true", "y_exact"):
            v = np.asarray(getattr(self, name), dtype=float)
            object.__setattr__(self, name, v)
            if not np.all(np.isfinite(v)):
                raise ConfigurationError(f"{name} has non-finite entries")
        if self.hilbert_weights is not None:
            w = np.asarray(self.hilbert_weights, dtype=float)
            object.__setattr__(self, "hilbert_weights", w)
            if np.any(w < 1.0) or np.any(np.diff(w) <= 0):
                raise ConfigurationError(
                    "hilbert_weights must be >= 1 and strictly increasing"
                )


@dataclass(frozen=True)
class NoisySample:
    """Perturbed data with its exact absolute and relative noise levels."""

    y_delta: np.ndarray
    delta_abs: float
    delta_rel: float
    seed: int


def deriv2_kernel(s, t):
    """Green's function kernel of the second-derivative problem."""
    s = np.asarray(s, dtype=float)
    t = np.asarray(t, dtype=float)
    return np.where(s < t, s * (t - 1.0), t * (s - 1.0))


def make_deriv2(n: int, solution: str = "linear_t",
                normalize: bool = False) -> InverseProblem:
    """Midpoint-collocation discretization of the second-derivative problem.

    The matrix is ``A_ij = k(s_i, t_j)/n`` on the midpoint grid
    ``t_i = (i - 1/2)/n`` with the quadrature weight folded in.  The exact
    solution is ``x(t) = t`` (``solution="linear_t"``) or ``x == 1``
    (``solution="constant_one"``), sampled at the nodes.
    """
    if n < 4:
        raise ConfigurationError("deriv2 needs n >= 4")
    if solution not in ("linear_t", "constant_one"):
        raise ConfigurationError(f"unknown solution {solution!r}")
    t = (np.arange(1, n + 1) - 0.5) / n
    ss, tt = np.meshgrid(t, t, indexing="ij")
    matrix = deriv2_kernel(ss, tt) / n
    op = build_svd_operator(matrix, normalize=normalize)
    x_true = t.copy() if solution == "linear_t" else np.ones(n)
    y_exact = apply(op, "A", x_true)
    return InverseProblem(op=op, x_true=x_true, y_exact=y_exact, grid=t)


def make_diagonal_model(n: int, eta: float, beta_decay: float,
                        leading_ones: int = 0) -> InverseProblem:
    """Diagonal operator with power-law spectrum and solution coefficients.

    ``sigma_i = i^-eta`` and ``<x, v_i> = i^-beta_decay`` except that the
    first ``leading_ones`` coefficients are set to one.  The coefficient
    tails then satisfy the smoothness-index sum bound with
    ``mu = (2 beta - 1)/(4 eta)``, which is recorded as ``mu_nominal``.
    """
    if n < 1 or eta <= 0 or beta_decay <= 0:
        raise ConfigurationError("n, eta, beta_decay must be positive")
    if 2.0 * beta_decay <= 1.0:
        raise ConfigurationError(
            "need 2*beta_decay > 1 so the coefficient tail is summable"
        )
    if leading_ones < 0 or leading_ones > n:
        raise ConfigurationError("leading_ones must be in [0, n]")
    i = np.arange(1, n + 1, dtype=float)
    sig = i ** (-eta)
    x = i ** (-beta_decay)
    if leading_ones:
        x[:leading_ones] = 1.0
    op = SingularSystem(sigmas=sig)
    mu = (2.0 * beta_decay - 1.0) / (4.0 * eta)
    return InverseProblem(op=op, x_true=x, y_exact=sig * x, mu_nominal=mu)


def make_hilbert_scale_model(n: int, a: float, p: float,
                             s_hint: float = 0.0) -> InverseProblem:
    """Diagonal Hilbert-scale model with exact norm equivalences.

    Weights ``t_i = i`` and ``sigma_i = i^-a`` make ``||A x||`` identically
    the weighted norm of order ``-a``.  The solution coefficients
    ``i^-(p + 0.51)`` keep the order-``p`` norm finite while any clearly
    higher order diverges, so penalties with ``s > p`` run in the
    oversmoothing regime.
    """
    if n < 1 or a <= 0 or p <= 0:
        raise ConfigurationError("n, a, p must be positive")
    i = np.arange(1, n + 1, dtype=float)
    sig = i ** (-a)
    x = i ** (-(p + 0.5 + 0.01))
    op = SingularSystem(sigmas=sig)
    mu = p / (2.0 * a)
    return InverseProblem(op=op, x_true=x, y_exact=sig * x, mu_nominal=mu,
                          hilbert_weights=i, s_hint=s_hint)


def add_noise(problem: InverseProblem, delta_rel: float, seed: int) -> NoisySample:
    """Gaussian perturbation rescaled to an exact relative noise level.

    A standard normal vector is drawn from a counter-based generator keyed
    by ``seed`` and rescaled so that ``||y - y_delta|| / ||y|| == delta_rel``
    holds exactly.  ``delta_rel = 0`` returns the exact data unchanged.
    """
    if delta_rel < 0:
        raise ConfigurationError("delta_rel must be nonnegative")
    y = problem.y_exact
    if delta_rel == 0:
        return NoisySample(y_delta=y.copy(), delta_abs=0.0, delta_rel=0.0,
                           seed=seed)
    rng = np.random.default_rng(seed)
    eps = rng.standard_normal(y.size)
    delta_abs = delta_rel * float(np.linalg.norm(y))
    eps *= delta_abs / np.linalg.norm(eps)
    return NoisySample(y_delta=y + eps, delta_abs=delta_abs,
                       delta_rel=delta_rel, seed=seed)
