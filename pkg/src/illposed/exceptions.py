"""Exception types shared across the package."""

__all__ = ["ConfigurationError", "NumericError", "NoCrossingError"]


class ConfigurationError(ValueError):
    """Invalid input, parameter, or configuration detected before computing."""


class NumericError(RuntimeError):
    """A numerical procedure failed to converge or left its valid regime."""


class NoCrossingError(NumericError):
    """A root bracket does not contain a sign change.

    Raised by the discrepancy principle when the residual never crosses
    the target level on the given interval, which usually means the noise
    level is too large or too small for the problem at hand.
    """
