"""Closed-form fluid-network analytics.

The fluid network replaces discrete interferers by a continuum of
density rho_BS starting at one inter-site distance (2*R_c) from the
serving station, which yields a closed-form SINR profile

    gamma(r) = (eta - 2) / (2 pi rho_BS) * r^-eta * (2 R_c - r)^(eta-2)

that depends only on the distance r to the serving station. With the
lattice density rho_BS = sqrt(3)/(6 R_c^2) the profile reduces to a
density-free function of x = r / R_c.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from .errors import DomainError
from .placement import hexagonal_density
from .stats import FitCoefficients

_BISECTION_REL_TOL = 1e-12
_BISECTION_MAX_ITER = 200


@dataclass(frozen=True)
class FluidModel:
    """Fluid-network parameters: cell radius, station density, path-loss exponent."""

    half_isd: float
    eta: float
    density: float | None = None

    def __post_init__(self):
        if self.half_isd <= 0:
            raise DomainError("half_isd must be positive")
        if self.eta <= 2:
            raise DomainError("path loss exponent must exceed 2")
        if self.density is None:
            object.__setattr__(self, "density", hexagonal_density(self.half_isd))
        elif self.density <= 0:
            raise DomainError("density must be positive")


def fluid_sinr(m: FluidModel, r: float) -> float:
    """Linear SINR at distance r from the serving station, 0 < r < 2*R_c."""
    rc = m.half_isd
    if not 0 < r < 2 * rc:
        raise DomainError("r must lie in (0, 2*half_isd)")
    return ((m.eta - 2) / (2 * math.pi * m.density)
            * r ** (-m.eta) * (2 * rc - r) ** (m.eta - 2))


def normalized_sinr(eta: float, x: float) -> float:
    """Density-free SINR profile in the relative distance x = r / R_c."""
    if eta <= 2:
        raise DomainError("path loss exponent must exceed 2")
    if not 0 < x < 2:
        raise DomainError("x must lie in (0, 2)")
    return (6.0 / math.sqrt(3.0)) * (eta - 2) / (2 * math.pi) \
        * x ** (-eta) * (2 - x) ** (eta - 2)


def fluid_sinr_db(m: FluidModel, r: float) -> float:
    return 10.0 * math.log10(fluid_sinr(m, r))


def fitted_sinr_db(m: FluidModel, r: float, fit: FitCoefficients) -> float:
    """dB-domain SINR corrected by the linear-in-eta shift a*eta + b."""
    return fluid_sinr_db(m, r) - fit.shift_db(m.eta)


def mean_cell_radius(m: FluidModel) -> float:
    """Radius of the disk whose area equals the mean cell area 1/density.

    For the lattice density this is sqrt(2*sqrt(3)/pi) * R_c ~ 1.05 R_c;
    spreading UEs over this disk mirrors a user population uniform over
    the whole network area.
    """
    return math.sqrt(1.0 / (math.pi * m.density))


def invert_sinr_db(m: FluidModel, gamma_db: float, lo: float, hi: float) -> float:
    """Solve fluid_sinr_db(m, r) = gamma_db on [lo, hi] by bisection.

    The profile is strictly decreasing on (0, 2*R_c); the answer is
    clipped to the bracket if gamma_db falls outside its range.
    """
    if fluid_sinr_db(m, lo) <= gamma_db:
        return lo
    if fluid_sinr_db(m, hi) >= gamma_db:
        return hi
    for _ in range(_BISECTION_MAX_ITER):
        mid = 0.5 * (lo + hi)
        if fluid_sinr_db(m, mid) > gamma_db:
            lo = mid
        else:
            hi = mid
        if hi - lo <= _BISECTION_REL_TOL * hi:
            break
    return 0.5 * (lo + hi)


def fluid_cdf(m: FluidModel, gamma_db: float, exclusion: float = 0.01,
              cell_radius: float | None = None) -> float:
    """P(SINR in dB <= gamma_db) for a UE uniform on the serving-disk
    annulus exclusion*R_c <= r <= cell_radius (default R_c)."""
    if not 0 < exclusion < 1:
        raise DomainError("exclusion must lie in (0, 1)")
    rc = m.half_isd
    edge = rc if cell_radius is None else cell_radius
    lo = exclusion * rc
    if not lo < edge < 2 * rc:
        raise DomainError("cell_radius must lie in (exclusion*R_c, 2*R_c)")
    rstar = invert_sinr_db(m, gamma_db, lo, edge)
    p = (edge**2 - rstar**2) / (edge**2 - lo**2)
    return min(1.0, max(0.0, p))


class FluidCdf:
    """Analytic SINR CDF of the fluid cell, optionally shifted in dB.

    Exposes the same evaluate/quantile surface as an empirical CDF so
    curves from both models can be compared on equal footing. A shift of
    s dB moves the whole curve left by s (the fitted-fluid correction).
    """

    def __init__(self, model: FluidModel, exclusion: float = 0.01, shift_db: float = 0.0,
                 cell_radius: float | None = None):
        if not 0 < exclusion < 1:
            raise DomainError("exclusion must lie in (0, 1)")
        self.model = model
        self.exclusion = exclusion
        self.shift_db = shift_db
        self.cell_radius = model.half_isd if cell_radius is None else cell_radius
        if not exclusion * model.half_isd < self.cell_radius < 2 * model.half_isd:
            raise DomainError("cell_radius must lie in (exclusion*R_c, 2*R_c)")

    def evaluate(self, gamma_db):
        f = lambda g: fluid_cdf(self.model, g + self.shift_db, self.exclusion,
                                self.cell_radius)
        if np.ndim(gamma_db):
            return np.array([f(g) for g in np.asarray(gamma_db, dtype=float)])
        return f(float(gamma_db))

    def quantile(self, p):
        """Inverse CDF; closed form via the annulus area law."""
        parr = np.atleast_1d(np.asarray(p, dtype=float))
        if np.any((parr <= 0) | (parr >= 1)):
            raise DomainError("p must lie in (0, 1)")
        lo = self.exclusion * self.model.half_isd
        edge = self.cell_radius
        r = np.sqrt(edge**2 - parr * (edge**2 - lo**2))
        out = np.array([fluid_sinr_db(self.model, ri) for ri in r]) - self.shift_db
        return out if np.ndim(p) else float(out[0])

    def shifted(self, shift_db: float) -> "FluidCdf":
        return FluidCdf(self.model, self.exclusion, self.shift_db + shift_db,
                        self.cell_radius)


def spectral_efficiency(gamma: float) -> float:
    """Shannon spectral efficiency log2(1 + gamma) in bits/s/Hz."""
    if gamma < 0:
        raise DomainError("SINR must be nonnegative")
    return math.log2(1.0 + gamma)


def cell_edge_throughput(m: FluidModel) -> float:
    """Minimum (cell-edge) spectral efficiency, at r = R_c."""
    return spectral_efficiency(fluid_sinr(m, m.half_isd))


def average_cell_throughput(m: FluidModel, exclusion: float = 0.01) -> float:
    """Area-average spectral efficiency over the serving-disk annulus."""
    if not 0 < exclusion < 1:
        raise DomainError("exclusion must lie in (0, 1)")
    rc = m.half_isd
    lo = exclusion * rc
    weight_norm = rc**2 * (1 - exclusion**2)

    def integrand(r):
        return math.log2(1.0 + fluid_sinr(m, r)) * 2.0 * r / weight_norm

    value, _ = quad(integrand, lo, rc, epsrel=1e-9, epsabs=0, limit=200)
    return value
