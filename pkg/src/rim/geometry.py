"""Planar positions, distances, and transmitter-relative bearings.

The model is strictly 2D.  Bearings follow the mathematical convention:
degrees counterclockwise from the +x axis, normalized into [0, 360).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateGeometryError, ParameterError


@dataclass(frozen=True)
class Position:
    """A point in the plane, in meters."""

    x: float
    y: float

    def __post_init__(self):
        for name in ("x", "y"):
            v = getattr(self, name)
            if not isinstance(v, (int, float)) or not math.isfinite(v):
                raise ParameterError(f"coordinate {name} must be finite, got {v!r}")
            object.__setattr__(self, name, float(v))


def distance(p: Position, q: Position) -> float:
    """Euclidean distance between two positions, in meters."""
    return math.hypot(q.x - p.x, q.y - p.y)


def bearing_deg(origin: Position, target: Position) -> float:
    """Angle of the vector origin->target, in degrees within [0, 360).

    Measured counterclockwise from the +x axis.  Coincident points have no
    direction and raise :class:`DegenerateGeometryError`.
    """
    dx = target.x - origin.x
    dy = target.y - origin.y
    if dx == 0.0 and dy == 0.0:
        raise DegenerateGeometryError(f"bearing undefined for coincident points {origin}")
    deg = math.degrees(math.atan2(dy, dx)) % 360.0
    # Float modulo can yield exactly 360.0 for tiny negative angles.
    return 0.0 if deg >= 360.0 else deg
