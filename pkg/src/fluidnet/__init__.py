"""SINR distributions for hexagonal, Poisson and fluid cellular networks."""

from .config import ExperimentConfig
from .fluid import (FluidCdf, FluidModel, average_cell_throughput,
                    cell_edge_throughput, fitted_sinr_db, fluid_cdf, fluid_sinr,
                    normalized_sinr, spectral_efficiency)
from .geometry import Point, TorusRegion, torus_distance
from .placement import (ModelKind, NetworkLayout, generate_hexagonal,
                        generate_poisson, hexagonal_density,
                        region_for_expected_count)
from .sinr import (PropagationModel, SinrSampleSet, UserSet, best_server,
                   path_gain, run_monte_carlo, sinr, sinr_field)
from .stats import (CANONICAL_FIT, EmpiricalCdf, FitCoefficients, ShiftFit,
                    cdf_curve_correlation, correlation_coefficient,
                    empirical_cdf, fit_linear, mean_horizontal_shift,
                    outage_probability, quantile)

__version__ = "0.1.0"

__all__ = [
    "CANONICAL_FIT", "EmpiricalCdf", "ExperimentConfig", "FitCoefficients",
    "FluidCdf", "FluidModel", "ModelKind", "NetworkLayout", "Point",
    "PropagationModel", "ShiftFit", "SinrSampleSet", "TorusRegion", "UserSet",
    "average_cell_throughput", "best_server", "cdf_curve_correlation",
    "cell_edge_throughput", "correlation_coefficient", "empirical_cdf",
    "fit_linear", "fitted_sinr_db", "fluid_cdf", "fluid_sinr",
    "generate_hexagonal", "generate_poisson", "hexagonal_density",
    "mean_horizontal_shift", "normalized_sinr", "outage_probability",
    "path_gain", "quantile", "region_for_expected_count", "run_monte_carlo",
    "sinr", "sinr_field", "spectral_efficiency", "torus_distance",
]
