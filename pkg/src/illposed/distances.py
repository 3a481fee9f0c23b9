"""Distance functions quantifying approximate source conditions.

``distance_value`` evaluates, for a benchmark power ``kappa`` and an
operator power ``nu``, the constrained best-approximation error

    d(R) = inf over ||xi|| <= R of  ||(A*A)^nu x - (A*A)^(nu+kappa) xi||

via its Lagrange-multiplier form: in spectral coordinates the optimal
multiplier ``lambda`` solves ``R(lambda) = R`` with

    R^2(lambda) = sum_i s_i^2 t_i^2 / (s_i^2 + lambda)^2,
    d^2(lambda) = lambda^2 sum_i t_i^2 / (s_i^2 + lambda)^2,

where ``t_i = sigma_i^(2 nu) <x, v_i>`` and ``s_i = sigma_i^(2 nu + 2 kappa)``.
``R(lambda)`` is strictly decreasing, so a bisection on ``log lambda``
always converges.  The same machinery evaluates the noise distance
``inf ||eps - A (A*A)^kappa xi||`` with ``s_i = sigma_i^(2 kappa + 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .exceptions import ConfigurationError, NumericError
from .operators import SingularSystem

__all__ = [
    "DistancePoint",
    "DistanceCurve",
    "ExponentSet",
    "distance_value",
    "distance_curve",
    "noise_distance",
    "theoretical_exponents",
    "inverse_distance",
    "classify_regimes",
]

LAMBDA_BRACKET = (1e-30, 1e10)
MAX_BISECTIONS = 200
R_RTOL = 1e-8

#: d values below this fraction of the zero-budget distance are floor hits
FLOOR_FRACTION = 1e-12


@dataclass(frozen=True)
class DistancePoint:
    """One evaluated point of a distance function."""

    R: float
    d: float
    lam: float
    achieved_R: float
    saturated: bool = False
    valid: bool = True


@dataclass(frozen=True)
class DistanceCurve:
    """Sampled distance function with its defining powers.

    ``target_norm`` is the zero-budget limit ``||(A*A)^nu x||``, the value
    the distance approaches as ``R -> 0``.
    """

    nu: float
    kappa: float
    points: list[DistancePoint]
    target_norm: float = field(default=0.0)

    def arrays(self, include_floor: bool = True):
        """Valid points as arrays ``(R, d, lam)``, optionally without floor hits."""
        pts = [p for p in self.points if p.valid]
        if not include_floor:
            pts = [p for p in pts if not self.is_floor(p)]
        R = np.array([p.R for p in pts])
        d = np.array([p.d for p in pts])
        lam = np.array([p.lam for p in pts])
        return R, d, lam

    def is_floor(self, point: DistancePoint) -> bool:
        return point.saturated or point.d < FLOOR_FRACTION * self.target_norm


def _solve_budget(s2: np.ndarray, t2: np.ndarray, extra_sq: float, R: float,
                  bracket_hi: float | None = None):
    """Find the multiplier with ``R(lambda) = R`` and return the point.

    ``s2`` and ``t2`` are the squared spectral factors and target
    coefficients; ``extra_sq`` is target energy orthogonal to the spectral
    span, which no budget can remove.
    """

    def R_of(lam: float) -> float:
        return float(np.sqrt(np.sum(s2 * t2 / (s2 + lam) ** 2)))

    def d_of(lam: float) -> float:
        return float(np.sqrt(lam**2 * np.sum(t2 / (s2 + lam) ** 2) + extra_sq))

    lo, hi = LAMBDA_BRACKET
    r_lo = R_of(lo)
    if R >= r_lo * (1.0 - 1e-12):
        # budget exceeds what any multiplier can spend: the constraint is
        # inactive and d sits at the projection floor
        return DistancePoint(R=R, d=d_of(lo), lam=lo, achieved_R=r_lo,
                             saturated=True)
    if bracket_hi is not None and bracket_hi > lo:
        hi = bracket_hi
    while R_of(hi) > R:
        hi *= 1e10
        if hi > 1e60:
            raise NumericError(f"no upper bracket for R={R}")
    lam = hi
    for _ in range(MAX_BISECTIONS):
        lam = np.sqrt(lo * hi)
        r = R_of(lam)
        if abs(r - R) <= R_RTOL * R:
            return DistancePoint(R=R, d=d_of(lam), lam=float(lam),
                                 achieved_R=r)
        if r > R:
            lo = lam
        else:
            hi = lam
    raise NumericError(
        f"budget bisection did not converge: R={R}, last lambda={lam}, "
        f"achieved R={R_of(lam)}"
    )


def _domain_targets(op: SingularSystem, x_true: np.ndarray, nu: float,
                    kappa: float):
    if kappa <= 0:
        raise ConfigurationError("kappa must be positive")
    if nu < 0:
        raise ConfigurationError("nu must be nonnegative")
    x_true = np.asarray(x_true, dtype=float)
    sig = op.sigmas
    x_v = op.domain_coefs(x_true)
    t = sig ** (2.0 * nu) * x_v
    s = sig ** (2.0 * (nu + kappa))
    extra_sq = 0.0
    if nu == 0:
        extra_sq = float(np.sum(op.domain_perp(x_true) ** 2))
    target_norm = float(np.sqrt(np.sum(t**2) + extra_sq))
    if target_norm == 0:
        raise ConfigurationError("x_true must have a nonzero component")
    return s**2, t**2, extra_sq, target_norm


def distance_value(op: SingularSystem, x_true: np.ndarray, nu: float,
                   kappa: float, R: float) -> DistancePoint:
    """Evaluate the distance function at a single budget ``R``."""
    if R <= 0:
        raise ConfigurationError("R must be positive")
    s2, t2, extra_sq, _ = _domain_targets(op, x_true, nu, kappa)
    return _solve_budget(s2, t2, extra_sq, R)


def distance_curve(op: SingularSystem, x_true: np.ndarray, nu: float,
                   kappa: float, R_grid) -> DistanceCurve:
    """Evaluate the distance function over a strictly increasing grid.

    Points where the multiplier search fails are marked invalid and the
    curve is still returned.  Monotonicity of ``d`` across valid points is
    checked as a postcondition.
    """
    R_grid = np.asarray(R_grid, dtype=float)
    if R_grid.ndim != 1 or R_grid.size == 0 or np.any(np.diff(R_grid) <= 0):
        raise ConfigurationError("R_grid must be strictly increasing")
    s2, t2, extra_sq, target_norm = _domain_targets(op, x_true, nu, kappa)
    points = []
    prev_lam = None
    for R in R_grid:
        try:
            pt = _solve_budget(s2, t2, extra_sq, float(R), bracket_hi=prev_lam)
            prev_lam = pt.lam if not pt.saturated else prev_lam
        except NumericError:
            pt = DistancePoint(R=float(R), d=float("nan"), lam=float("nan"),
                               achieved_R=float("nan"), valid=False)
        points.append(pt)
    valid = [p for p in points if p.valid]
    for a, b in zip(valid, valid[1:]):
        if b.d > a.d * (1.0 + 1e-9) + 1e-300:
            raise NumericError(
                f"distance not non-increasing: d({a.R})={a.d}, d({b.R})={b.d}"
            )
    return DistanceCurve(nu=float(nu), kappa=float(kappa), points=points,
                         target_norm=target_norm)


def noise_distance(op: SingularSystem, eps: np.ndarray, kappa: float,
                   R: float) -> DistancePoint:
    """Distance of a noise vector to the smoothed range ``A (A*A)^kappa``.

    The value never exceeds ``||eps||`` whatever the budget: the multiplier
    form is a contraction of the noise coefficients.
    """
    if R <= 0:
        raise ConfigurationError("R must be positive")
    if kappa < 0:
        raise ConfigurationError("kappa must be nonnegative")
    eps = np.asarray(eps, dtype=float)
    if float(np.linalg.norm(eps)) == 0.0:
        raise ConfigurationError("eps must be nonzero")
    sig = op.sigmas
    t = op.data_coefs(eps)
    s = sig ** (2.0 * kappa + 1.0)
    extra_sq = float(np.sum(op.data_perp(eps) ** 2))
    return _solve_budget(s**2, t**2, extra_sq, R)


@dataclass(frozen=True)
class ExponentSet:
    """Closed-form exponents attached to a smoothness index ``mu``.

    ``distance_exponent``: slope of ``d`` versus ``R``, ``(mu+nu)/(mu-kappa)``.
    ``rate_exponent``: error-versus-noise rate ``mu/(mu + 1/2)``, the pairing
    of the solution distance with the data distance.
    ``source_growth_exponent``: slope ``mu - kappa`` of the source norm
    versus the regularization parameter.
    ``apriori_exponent``: exponent of the a-priori parameter choice
    ``alpha ~ delta^e`` for the selected method.
    """

    distance_exponent: float
    rate_exponent: float
    source_growth_exponent: float
    apriori_exponent: float
    mu: float
    nu: float
    kappa: float


def theoretical_exponents(mu: float | None, nu: float, kappa: float | None,
                          method: str = "classical", kappa_order: int = 0,
                          a: float | None = None, p: float | None = None,
                          s: float | None = None) -> ExponentSet:
    """Exponent set for a method at smoothness ``mu``.

    For ``method="hilbert"`` the triple ``(a, p, s)`` determines everything:
    the equivalent powers are ``kappa = s/a + 1/2`` and ``mu = p/(2a)``, the
    rate is ``p/(a+p)`` and the parameter exponent ``2(s+a)/(a+p)``.
    """
    if method == "hilbert":
        if a is None or p is None or s is None:
            raise ConfigurationError("hilbert method needs a, p, s")
        if a <= 0 or p <= 0 or s < 0:
            raise ConfigurationError("need a > 0, p > 0, s >= 0")
        if p > 2 * s + a:
            raise ConfigurationError(
                f"admissibility p <= 2s + a violated: {p} > {2 * s + a}"
            )
        mu = p / (2.0 * a)
        kappa = s / a + 0.5
        apriori = 2.0 * (s + a) / (a + p)
    elif method == "classical":
        if mu is None or kappa is None:
            raise ConfigurationError("classical method needs mu and kappa")
        apriori = 2.0 / (2.0 * mu + 1.0)
    elif method == "high_order":
        if mu is None or kappa is None:
            raise ConfigurationError("high_order method needs mu and kappa")
        if kappa_order < 0:
            raise ConfigurationError("kappa_order must be nonnegative")
        apriori = (2.0 * kappa_order + 2.0) / (2.0 * mu + 1.0)
    else:
        raise ConfigurationError(f"unknown method {method!r}")
    if mu <= 0:
        raise ConfigurationError("mu must be positive")
    if mu >= kappa:
        raise ConfigurationError(
            f"distance exponent needs 0 < mu < kappa, got mu={mu}, kappa={kappa}"
        )
    return ExponentSet(
        distance_exponent=(mu + nu) / (mu - kappa),
        rate_exponent=mu / (mu + 0.5),
        source_growth_exponent=mu - kappa,
        apriori_exponent=apriori,
        mu=float(mu),
        nu=float(nu),
        kappa=float(kappa),
    )


def inverse_distance(curve: DistanceCurve, d_target: float) -> float:
    """Budget at which the curve reaches ``d_target``, by log-log interpolation."""
    if d_target <= 0:
        raise ConfigurationError("d_target must be positive")
    R, d, _ = curve.arrays(include_floor=False)
    keep = d > 0
    R, d = R[keep], d[keep]
    if R.size < 2:
        raise ConfigurationError("curve has too few usable points")
    # d is non-increasing in R; interpolate log R against log d ascending
    logd = np.log10(d[::-1])
    logR = np.log10(R[::-1])
    lt = np.log10(d_target)
    if lt < logd[0] or lt > logd[-1]:
        raise ConfigurationError(
            f"d_target={d_target} outside curve range [{d[-1]}, {d[0]}]"
        )
    return float(10.0 ** np.interp(lt, logd, logR))


def classify_regimes(curve: DistanceCurve, op: SingularSystem,
                     wellposed_factor: float = 10.0) -> list[str]:
    """Per-point regime flags: ``asymptotic``, ``wellposed``, ``floor``.

    A point is a floor hit when its budget constraint was inactive or its
    value sits below the round-off fraction of the zero-budget distance.
    The well-posed (discretization-saturated) regime is flagged where the
    multiplier has fallen to the scale of the smallest spectral factor.
    """
    s_min_sq = float(op.sigmas[-1] ** (4.0 * (curve.nu + curve.kappa)))
    flags = []
    for p in curve.points:
        if not p.valid:
            flags.append("invalid")
        elif curve.is_floor(p):
            flags.append("floor")
        elif p.lam <= wellposed_factor * s_min_sq:
            flags.append("wellposed")
        else:
            flags.append("asymptotic")
    return flags
