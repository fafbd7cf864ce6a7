"""Regular N-gon geometry and the per-side coordinates.

The polygon is inscribed in a circle of radius ``a`` and its corners sit at
polar angles ``xi = 2*pi*m/N``. Side ``m`` (1-based) spans
``[2(m-1)pi/N, 2m*pi/N]``; on it the local angle from the side's
perpendicular bisector is ``theta = xi - (2m-1)pi/N``, the radius is
``r = b*sec(theta)`` and the flattened coordinate is ``q = b*tan(theta)``,
the signed distance from the side midpoint.

A corner shared by two sides belongs to the lower-indexed side, except
``xi = 0`` (side 1) and ``xi = 2*pi`` (side N).
"""

import math
from dataclasses import dataclass, field

import numpy as np

from ._validation import check_angles, check_n_sides, check_positive

__all__ = [
    "PhysicalConstants",
    "PolygonSpec",
    "PolygonGeometry",
    "SideCoordinate",
    "derive_geometry",
    "locate",
    "radial",
    "q_of_xi",
    "xi_of_q",
    "arc_position",
]

# relative slack for snapping xi onto an exact corner
_CORNER_TOL = 1e-12


@dataclass(frozen=True)
class PhysicalConstants:
    hbar: float = 1.0
    mass: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "hbar", check_positive(self.hbar, "hbar"))
        if self.mass != 1.0:
            raise ValueError("mass is fixed at 1.0 (unit-mass particle)")


@dataclass(frozen=True)
class PolygonSpec:
    """Model parameters: side count, circumradius and constants."""

    n_sides: int
    circumradius: float = 1.0
    constants: PhysicalConstants = field(default_factory=PhysicalConstants)

    def __post_init__(self):
        object.__setattr__(self, "n_sides", check_n_sides(self.n_sides))
        object.__setattr__(
            self, "circumradius", check_positive(self.circumradius, "circumradius")
        )

    @property
    def degenerate_parametrization(self):
        """True for N = 2, where the polygon collapses to a segment."""
        return self.n_sides == 2

    @property
    def hbar(self):
        return self.constants.hbar


@dataclass(frozen=True)
class PolygonGeometry:
    n_sides: int
    circumradius: float
    apothem: float
    side_length: float
    perimeter: float
    half_angle: float

    def require_sides(self):
        if self.n_sides < 3:
            raise ValueError(
                "the side parametrization needs n_sides >= 3 "
                f"(got {self.n_sides}); N=2 only supports well-level energies"
            )


@dataclass(frozen=True)
class SideCoordinate:
    side_index: int
    xi: float
    theta: float


def derive_geometry(spec):
    n = spec.n_sides
    a = spec.circumradius
    half = math.pi / n
    c = 2.0 * a * math.sin(half)
    return PolygonGeometry(
        n_sides=n,
        circumradius=a,
        apothem=a * math.cos(half),
        side_length=c,
        perimeter=n * c,
        half_angle=half,
    )


def _as_geometry(spec_or_geom):
    if isinstance(spec_or_geom, PolygonGeometry):
        return spec_or_geom
    return derive_geometry(spec_or_geom)


def _side_indices(xi, n_sides):
    """Vectorized side lookup with the lower-index corner convention."""
    t = np.asarray(xi, dtype=float) * (n_sides / (2.0 * math.pi))
    nearest = np.rint(t)
    t = np.where(np.abs(t - nearest) <= _CORNER_TOL * np.maximum(1.0, t), nearest, t)
    return np.clip(np.ceil(t), 1, n_sides).astype(int)


def _local_angles(xi, m, n_sides):
    half = math.pi / n_sides
    theta = np.asarray(xi, dtype=float) - (2 * np.asarray(m) - 1) * half
    return np.clip(theta, -half, half)


def locate(xi, spec):
    """Find the side carrying polar angle ``xi`` (radians, in [0, 2*pi])."""
    geom = _as_geometry(spec)
    geom.require_sides()
    xi = float(check_angles(xi))
    m = int(_side_indices(xi, geom.n_sides))
    theta = float(_local_angles(xi, m, geom.n_sides))
    return SideCoordinate(side_index=m, xi=xi, theta=theta)


def radial(coord, geom):
    geom.require_sides()
    return geom.apothem / math.cos(coord.theta)


def q_of_xi(coord, geom):
    geom.require_sides()
    return geom.apothem * math.tan(coord.theta)


def xi_of_q(q, side_index, geom):
    """Inverse of :func:`q_of_xi` on side ``side_index``."""
    geom.require_sides()
    if not 1 <= side_index <= geom.n_sides:
        raise ValueError(f"side_index must be in 1..{geom.n_sides}, got {side_index}")
    half_side = 0.5 * geom.side_length
    if not abs(q) <= half_side * (1.0 + 1e-12):
        raise ValueError(f"|q| must be <= c/2 = {half_side}, got {q}")
    theta = math.atan(q / geom.apothem)
    theta = min(max(theta, -geom.half_angle), geom.half_angle)
    xi = theta + (2 * side_index - 1) * geom.half_angle
    return SideCoordinate(side_index=side_index, xi=xi, theta=theta)


def arc_position(coord, geom):
    """Arc length from the xi = 0 corner, walking counter-clockwise."""
    c = geom.side_length
    start = (coord.side_index - 1) * c
    return max(start, start + q_of_xi(coord, geom) + 0.5 * c)


def polar_to_cartesian(coord, geom):
    r = radial(coord, geom)
    return r * math.cos(coord.xi), r * math.sin(coord.xi)


def side_arrays(xi, geom):
    """Array versions of locate/q/s for sampling and quadrature.

    Returns ``(m, theta, q, s)``.
    """
    geom.require_sides()
    xi = check_angles(xi)
    m = _side_indices(xi, geom.n_sides)
    theta = _local_angles(xi, m, geom.n_sides)
    q = geom.apothem * np.tan(theta)
    start = (m - 1) * geom.side_length
    s = np.maximum(start, start + q + 0.5 * geom.side_length)
    return m, theta, q, s
