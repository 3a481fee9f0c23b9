"""Compact linear operators represented by their singular system.

Every computation in this package runs in the spectral coordinates of a
forward operator ``A``: the triples ``(sigma_i, u_i, v_i)`` with
``A v_i = sigma_i u_i`` and ``A* u_i = sigma_i v_i``.  Dense operators carry
their singular-vector factors; diagonal model operators omit them, in which
case the canonical basis is understood and all vectors are spectral
coefficients already.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import ConfigurationError

__all__ = ["SingularSystem", "build_svd_operator", "apply"]

#: relative cutoff below which singular values are treated as numerically zero
RANK_CUTOFF = 1e-14

_MODES = ("A", "A_adjoint", "AstarA_power", "A_then_power")


@dataclass(frozen=True)
class SingularSystem:
    """Singular system of a discretized compact operator.

    Parameters
    ----------
    sigmas : ndarray, shape (r,)
        Positive singular values, non-increasing.  Ties are allowed.
    left_factor : ndarray or None, shape (m, r)
        Orthonormal columns ``u_i`` spanning the data side.  ``None`` means
        the canonical basis (diagonal operator).
    right_factor : ndarray or None, shape (n, r)
        Orthonormal columns ``v_i`` spanning the domain side.
    norm_scale : float
        Factor divided out of the singular values when the operator was
        normalized so that ``sigma_1 = 1``; 1.0 otherwise.
    """

    sigmas: np.ndarray
    left_factor: np.ndarray | None = None
    right_factor: np.ndarray | None = None
    norm_scale: float = 1.0

    def __post_init__(self):
        sig = np.asarray(self.sigmas, dtype=float)
        object.__setattr__(self, "sigmas", sig)
        if sig.ndim != 1 or sig.size == 0:
            raise ConfigurationError("sigmas must be a non-empty 1-D array")
        if not np.all(np.isfinite(sig)) or np.any(sig <= 0):
            raise ConfigurationError("singular values must be finite and positive")
        if np.any(np.diff(sig) > 0):
            raise ConfigurationError("singular values must be non-increasing")
        if self.norm_scale <= 0:
            raise ConfigurationError("norm_scale must be positive")
        for name in ("left_factor", "right_factor"):
            fac = getattr(self, name)
            if fac is not None:
                fac = np.asarray(fac, dtype=float)
                object.__setattr__(self, name, fac)
                if fac.ndim != 2 or fac.shape[1] != sig.size:
                    raise ConfigurationError(
                        f"{name} must have one column per singular value"
                    )
        if (self.left_factor is None) != (self.right_factor is None):
            raise ConfigurationError("factors must be given together or not at all")

    @property
    def rank(self) -> int:
        return self.sigmas.size

    @property
    def dim_domain(self) -> int:
        return self.rank if self.right_factor is None else self.right_factor.shape[0]

    @property
    def dim_data(self) -> int:
        return self.rank if self.left_factor is None else self.left_factor.shape[0]

    def data_coefs(self, y: np.ndarray) -> np.ndarray:
        """Coefficients of a data-space vector against the ``u_i``."""
        y = np.asarray(y, dtype=float)
        return y if self.left_factor is None else self.left_factor.T @ y

    def domain_coefs(self, x: np.ndarray) -> np.ndarray:
        """Coefficients of a domain vector against the ``v_i``."""
        x = np.asarray(x, dtype=float)
        return x if self.right_factor is None else self.right_factor.T @ x

    def from_data_coefs(self, c: np.ndarray) -> np.ndarray:
        c = np.asarray(c, dtype=float)
        return c if self.left_factor is None else self.left_factor @ c

    def from_domain_coefs(self, c: np.ndarray) -> np.ndarray:
        c = np.asarray(c, dtype=float)
        return c if self.right_factor is None else self.right_factor @ c

    def data_perp(self, y: np.ndarray) -> np.ndarray:
        """Component of ``y`` orthogonal to the span of the ``u_i``."""
        y = np.asarray(y, dtype=float)
        if self.left_factor is None:
            return np.zeros_like(y)
        return y - self.left_factor @ (self.left_factor.T @ y)

    def domain_perp(self, x: np.ndarray) -> np.ndarray:
        """Component of ``x`` orthogonal to the span of the ``v_i``."""
        x = np.asarray(x, dtype=float)
        if self.right_factor is None:
            return np.zeros_like(x)
        return x - self.right_factor @ (self.right_factor.T @ x)

    def forward(self, x: np.ndarray) -> np.ndarray:
        return apply(self, "A", x)

    def adjoint(self, y: np.ndarray) -> np.ndarray:
        return apply(self, "A_adjoint", y)

    def power(self, x: np.ndarray, nu: float) -> np.ndarray:
        """Apply ``(A*A)^nu``; the identity on span{v_i} for ``nu = 0``."""
        return apply(self, "AstarA_power", x, nu=nu)


def build_svd_operator(matrix: np.ndarray, normalize: bool = False) -> SingularSystem:
    """Build a :class:`SingularSystem` from a dense matrix via full SVD.

    Singular values at or below ``RANK_CUTOFF`` relative to the largest one
    are dropped.  With ``normalize=True`` all singular values are divided by
    the largest so that ``sigma_1 = 1``; the original scale is recorded in
    ``norm_scale``.
    """
    matrix = np.asarray(matrix, dtype=float)
    if matrix.ndim != 2 or matrix.size == 0:
        raise ConfigurationError("matrix must be 2-D and non-empty")
    if not np.all(np.isfinite(matrix)):
        raise ConfigurationError("matrix entries must be finite")
    u, sig, vt = np.linalg.svd(matrix, full_matrices=False)
    keep = sig > RANK_CUTOFF * sig[0]
    u, sig, v = u[:, keep], sig[keep], vt[keep].T
    scale = 1.0
    if normalize:
        scale = float(sig[0])
        sig = sig / scale
    return SingularSystem(sigmas=sig, left_factor=u, right_factor=v,
                          norm_scale=scale)


def apply(op: SingularSystem, mode: str, x: np.ndarray, nu: float = 0.0) -> np.ndarray:
    """Apply the operator, its adjoint, or fractional powers of ``A*A``.

    Modes
    -----
    ``"A"``
        ``x`` in the domain, result in data space.
    ``"A_adjoint"``
        ``x`` in data space, result in the domain.
    ``"AstarA_power"``
        ``(A*A)^nu`` on the domain; acts as ``sigma_i^(2 nu)`` on
        ``v``-coefficients and annihilates the orthogonal complement.
    ``"A_then_power"``
        ``(A A*)^nu A``, i.e. factor ``sigma_i^(2 nu + 1)`` mapping
        ``v``-coefficients to ``u``-coefficients.
    """
    if mode not in _MODES:
        raise ConfigurationError(f"unknown mode {mode!r}; expected one of {_MODES}")
    if nu < 0:
        raise ConfigurationError("nu must be nonnegative")
    x = np.asarray(x, dtype=float)
    if x.ndim != 1:
        raise ConfigurationError("coefficient vectors must be 1-D")
    if not np.all(np.isfinite(x)):
        raise ConfigurationError("coefficient vector has non-finite entries")

    sig = op.sigmas
    if mode in ("A", "AstarA_power", "A_then_power"):
        if x.size != op.dim_domain:
            raise ConfigurationError(
                f"length {x.size} does not match domain dimension {op.dim_domain}"
            )
        c = op.domain_coefs(x)
    else:
        if x.size != op.dim_data:
            raise ConfigurationError(
                f"length {x.size} does not match data dimension {op.dim_data}"
            )
        c = op.data_coefs(x)

    if mode == "A":
        return op.from_data_coefs(sig * c)
    if mode == "A_adjoint":
        return op.from_domain_coefs(sig * c)
    if mode == "AstarA_power":
        factor = np.ones_like(sig) if nu == 0 else sig ** (2.0 * nu)
        return op.from_domain_coefs(factor * c)
    return op.from_data_coefs(sig ** (2.0 * nu + 1.0) * c)
