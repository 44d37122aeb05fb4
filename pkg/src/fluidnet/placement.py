"""Base-station layout generation on a torus.

Two layout families: a regular triangular (hexagonal-cell) lattice with
inter-site distance 2*half_isd, and a homogeneous spatial Poisson
process with the same density sqrt(3)/(6*half_isd^2).
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, InsufficientStations
from .geometry import TorusRegion
from .rng import generator, poisson_variate

SQRT3 = math.sqrt(3.0)


class ModelKind(str, enum.Enum):
    HEXAGONAL = "hexagonal"
    POISSON = "poisson"


def hexagonal_density(half_isd: float) -> float:
    """Station density of a triangular lattice with inter-site distance 2*half_isd."""
    if half_isd <= 0:
        raise DomainError("half_isd must be positive")
    return SQRT3 / (6.0 * half_isd**2)


@dataclass(frozen=True)
class NetworkLayout:
    """A set of station positions on a torus plus generation metadata."""

    region: TorusRegion
    stations: np.ndarray  # (n, 2) wrapped coordinates
    model: ModelKind
    density: float
    seed: int
    half_isd: float
    redraws: int = 0

    def __post_init__(self):
        if self.stations.ndim != 2 or self.stations.shape[1] != 2:
            raise DomainError("stations must have shape (n, 2)")
        if self.n_stations < 1:
            raise InsufficientStations("layout needs at least one station")

    @property
    def n_stations(self) -> int:
        return self.stations.shape[0]


def region_for_expected_count(half_isd: float, expected_count: float) -> TorusRegion:
    """Square torus whose area gives the wanted mean station count at lattice density."""
    if expected_count <= 0:
        raise DomainError("expected_count must be positive")
    area = expected_count / hexagonal_density(half_isd)
    side = math.sqrt(area)
    return TorusRegion(side, side)


def generate_hexagonal(half_isd: float, rings: int, seed: int = 0,
                       fill_region: bool = False) -> NetworkLayout:
    """Triangular lattice layout.

    With fill_region=False (default) the layout is the hexagonal patch of
    1 + 3*rings*(rings+1) stations centered in a torus large enough that
    no wrap image comes closer than the lattice spacing.

    With fill_region=True the torus is tiled exactly by a
    (2*rings+1) x (2*rings+2) lattice with offset rows, so every station
    has exactly 6 neighbours at distance 2*half_isd under the torus
    metric (an edge-free hexagonal reference network).
    """
    if rings < 1:
        raise InsufficientStations("rings must be >= 1 for interference analysis")
    if half_isd <= 0:
        raise DomainError("half_isd must be positive")
    r = float(half_isd)

    if fill_region:
        cols = 2 * rings + 1
        rows = 2 * rings + 2  # even row count keeps the offset pattern wrap-compatible
        region = TorusRegion(cols * 2.0 * r, rows * SQRT3 * r)
        pts = []
        for j in range(rows):
            x0 = r if j % 2 else 0.0
            for i in range(cols):
                pts.append((x0 + i * 2.0 * r, j * SQRT3 * r))
        stations = np.array(pts)
    else:
        k = rings
        region = TorusRegion((2 * k + 2) * 2.0 * r, (2 * k + 2) * SQRT3 * r)
        cx, cy = region.width / 2.0, region.height / 2.0
        pts = []
        # hexagon of lattice sites: basis (2r, 0) and (r, sqrt(3) r)
        for i in range(-k, k + 1):
            for j in range(-k, k + 1):
                if abs(i + j) > k:
                    continue
                pts.append((cx + i * 2.0 * r + j * r, cy + j * SQRT3 * r))
        stations = np.array(pts)

    stations[:, 0] %= region.width
    stations[:, 1] %= region.height
    return NetworkLayout(region=region, stations=stations, model=ModelKind.HEXAGONAL,
                         density=hexagonal_density(r), seed=seed, half_isd=r)


def generate_poisson(region: TorusRegion, density: float, seed: int,
                     half_isd: float | None = None) -> NetworkLayout:
    """Homogeneous Poisson process layout: N ~ Poisson(density * area),
    positions i.i.d. uniform, no pairwise constraint.

    If N = 0 is drawn (undefined for SINR), the draw is repeated with an
    incremented sub-seed; the redraw count is recorded on the layout.
    """
    if density <= 0:
        raise DomainError("density must be positive")
    mean = density * region.area()
    redraws = 0
    while True:
        rng = generator(seed, redraws)
        n = poisson_variate(rng, mean)
        if n > 0:
            break
        redraws += 1
    xy = rng.random((n, 2)) * np.array([region.width, region.height])
    if half_isd is None:
        half_isd = math.sqrt(SQRT3 / (6.0 * density))
    return NetworkLayout(region=region, stations=xy, model=ModelKind.POISSON,
                         density=density, seed=seed, half_isd=half_isd,
                         redraws=redraws)
