"""Empirical CDFs, horizontal-shift estimation and linear fitting.

The comparison between the simulated Poisson network and the analytic
fluid curve happens here: the mean horizontal (dB) offset between the
two CDFs is measured on a quantile grid for each path-loss exponent,
and a degree-1 polynomial in eta is fitted to those offsets.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateFit, DomainError, EmptySample, ZeroVariance

# Interior quantile grid; avoids tail order statistics where Monte
# Carlo noise dominates.
DEFAULT_P_GRID = tuple(round(0.02 * i, 2) for i in range(1, 50))

CORRELATION_GRID_POINTS = 200


@dataclass(frozen=True)
class FitCoefficients:
    """Line shift = a*eta + b, in dB."""

    a: float
    b: float

    def shift_db(self, eta: float) -> float:
        return self.a * eta + self.b


# The canonical correction observed for Poisson-vs-fluid SINR curves.
CANONICAL_FIT = FitCoefficients(a=3.0, b=-6.0)


@dataclass(frozen=True)
class ShiftFit:
    """Per-eta mean shifts and the fitted line through them."""

    etas: tuple
    shifts_db: tuple
    coefficients: FitCoefficients
    rms_residual_db: float

    def residuals(self) -> np.ndarray:
        pred = np.array([self.coefficients.shift_db(e) for e in self.etas])
        return np.asarray(self.shifts_db) - pred


class EmpiricalCdf:
    """Step CDF of a sample of dB values, with interpolated quantiles."""

    def __init__(self, values_db):
        values = np.sort(np.asarray(values_db, dtype=float).ravel())
        if values.size == 0:
            raise EmptySample("cannot build a CDF from an empty sample")
        self.sorted_values_db = values
        self.n = values.size

    def evaluate(self, x):
        """F(x) = fraction of samples <= x."""
        return np.searchsorted(self.sorted_values_db, np.asarray(x, dtype=float),
                               side="right") / self.n

    def quantile(self, p):
        """Linear interpolation of order statistics at position p*(n-1)."""
        parr = np.asarray(p, dtype=float)
        if np.any((parr <= 0) | (parr >= 1)):
            raise DomainError("p must lie in (0, 1)")
        return np.quantile(self.sorted_values_db, parr)


def empirical_cdf(samples) -> EmpiricalCdf:
    """CDF of pooled SINR samples, on the dB scale.

    Accepts a SinrSampleSet or any array of linear SINR values.
    """
    linear = np.asarray(getattr(samples, "samples", samples), dtype=float)
    if linear.size == 0:
        raise EmptySample("no SINR samples")
    return EmpiricalCdf(10.0 * np.log10(linear))


def quantile(cdf: EmpiricalCdf, p: float):
    return cdf.quantile(p)


def outage_probability(cdf, threshold_db: float):
    """Probability that the SINR falls at or below the service threshold."""
    return cdf.evaluate(threshold_db)


def mean_horizontal_shift(reference, target, p_grid=DEFAULT_P_GRID) -> float:
    """Mean dB offset between two CDF curves over a quantile grid.

    Positive when the reference curve lies to the right of the target
    (reference optimistic versus target).
    """
    p = np.asarray(p_grid, dtype=float)
    if p.size == 0 or np.any((p <= 0) | (p >= 1)):
        raise DomainError("p_grid must be nonempty within (0, 1)")
    qr = np.asarray([np.asarray(reference.quantile(pi)) for pi in p], dtype=float)
    qt = np.asarray([np.asarray(target.quantile(pi)) for pi in p], dtype=float)
    return float(np.mean(qr - qt))


def fit_linear(etas, shifts) -> ShiftFit:
    """Ordinary least squares line shift = a*eta + b."""
    x = np.asarray(etas, dtype=float)
    y = np.asarray(shifts, dtype=float)
    if x.size != y.size or x.size < 2:
        raise DegenerateFit("need at least 2 (eta, shift) points")
    if np.ptp(x) == 0:
        raise DegenerateFit("all eta values are equal")
    a, b = np.polyfit(x, y, deg=1)
    residuals = y - (a * x + b)
    return ShiftFit(etas=tuple(x), shifts_db=tuple(y),
                    coefficients=FitCoefficients(a=float(a), b=float(b)),
                    rms_residual_db=float(np.sqrt(np.mean(residuals**2))))


def correlation_coefficient(xs, ys) -> float:
    """Pearson correlation of two equal-length samples."""
    x = np.asarray(xs, dtype=float)
    y = np.asarray(ys, dtype=float)
    if x.size != y.size or x.size < 2:
        raise DomainError("inputs must have equal length >= 2")
    dx = x - x.mean()
    dy = y - y.mean()
    sx = np.sqrt(np.sum(dx**2))
    sy = np.sqrt(np.sum(dy**2))
    if sx == 0 or sy == 0:
        raise ZeroVariance("correlation undefined for constant input")
    return float(np.clip(np.sum(dx * dy) / (sx * sy), -1.0, 1.0))


def cdf_curve_correlation(fitted_fluid, poisson, n_points: int = CORRELATION_GRID_POINTS) -> float:
    """Correlation of two CDF curves sampled on a shared uniform dB grid.

    The grid spans the union of the curves' 1st-99th percentile ranges.
    """
    lo = min(float(np.min(fitted_fluid.quantile(0.01))), float(np.min(poisson.quantile(0.01))))
    hi = max(float(np.max(fitted_fluid.quantile(0.99))), float(np.max(poisson.quantile(0.99))))
    grid = np.linspace(lo, hi, n_points)
    return correlation_coefficient(fitted_fluid.evaluate(grid), poisson.evaluate(grid))
