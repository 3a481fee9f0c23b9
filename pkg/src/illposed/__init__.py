"""Desk-scale laboratory for linear ill-posed inverse problems.

Spectral Tikhonov regularization (classical, higher-order, Hilbert-scale),
Landweber iteration, distance functions for approximate source conditions,
parameter-choice rules, and reproducible rate experiments with CSV output.
"""

from .choice import ChoiceResult, alpha_apriori, alpha_discrepancy, alpha_oracle
from .distances import (DistanceCurve, DistancePoint, ExponentSet,
                        distance_curve, distance_value, inverse_distance,
                        noise_distance, theoretical_exponents)
from .exceptions import ConfigurationError, NoCrossingError, NumericError
from .experiments import (ExperimentReport, RateEstimate, Table, fit_rate,
                          run_experiment, saturation_probe, write_report)
from .operators import SingularSystem, apply, build_svd_operator
from .problems import (InverseProblem, NoisySample, add_noise, make_deriv2,
                       make_diagonal_model, make_hilbert_scale_model)
from .regularizers import (RegularizedSolution, landweber, source_element,
                           tikhonov, tikhonov_hilbert_scale)

__version__ = "0.1.0"

__all__ = [
    "ChoiceResult", "alpha_apriori", "alpha_discrepancy", "alpha_oracle",
    "DistanceCurve", "DistancePoint", "ExponentSet", "distance_curve",
    "distance_value", "inverse_distance", "noise_distance",
    "theoretical_exponents",
    "ConfigurationError", "NoCrossingError", "NumericError",
    "ExperimentReport", "RateEstimate", "Table", "fit_rate",
    "run_experiment", "saturation_probe", "write_report",
    "SingularSystem", "apply", "build_svd_operator",
    "InverseProblem", "NoisySample", "add_noise", "make_deriv2",
    "make_diagonal_model", "make_hilbert_scale_model",
    "RegularizedSolution", "landweber", "source_element", "tikhonov",
    "tikhonov_hilbert_scale",
]
