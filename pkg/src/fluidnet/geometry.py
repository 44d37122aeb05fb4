"""Toroidal geometry primitives.

The simulation area is a rectangle with periodic boundary conditions
(a flat torus), so a finite set of stations behaves like an edge-free,
virtually infinite network.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError


@dataclass(frozen=True)
class TorusRegion:
    """Rectangular region with wrap-around in both axes."""

    width: float
    height: float

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0:
            raise DomainError("torus dimensions must be positive")

    def area(self) -> float:
        return self.width * self.height

    def wrap(self, x: float, y: float) -> tuple[float, float]:
        """Map coordinates into [0, width) x [0, height)."""
        return x % self.width, y % self.height


@dataclass(frozen=True)
class Point:
    x: float
    y: float


def _axis_delta(a, b, period):
    d = np.abs(a - b) % period
    return np.minimum(d, period - d)


def torus_distance(region: TorusRegion, p: Point, q: Point) -> float:
    """Shortest distance between two points on the torus.

    Equals the minimum over the 9 periodic images; computed per axis
    since the rectangle is axis-aligned.
    """
    dx = _axis_delta(p.x, q.x, region.width)
    dy = _axis_delta(p.y, q.y, region.height)
    return math.hypot(dx, dy)


def torus_distance_matrix(region: TorusRegion, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Pairwise toroidal distances between point arrays a (n,2) and b (m,2)."""
    dx = _axis_delta(a[:, 0:1], b[None, :, 0], region.width)
    dy = _axis_delta(a[:, 1:2], b[None, :, 1], region.height)
    return np.hypot(dx, dy)


def wrapped_displacement(region: TorusRegion, origin: np.ndarray, target: np.ndarray) -> np.ndarray:
    """Displacement from origin to the nearest periodic image of target.

    Components lie in [-period/2, period/2).
    """
    d = np.asarray(target, dtype=float) - np.asarray(origin, dtype=float)
    period = np.array([region.width, region.height])
    return (d + period / 2.0) % period - period / 2.0
