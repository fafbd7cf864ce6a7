"""Newton's bounce model: a unit mass running around an inscribed N-gon.

At each corner the velocity turns by the exterior angle ``2 pi / N``, so the
impulse has magnitude ``2 v sin(pi/N)`` and points at the centre. Dividing by
the time ``c / v`` to run one side gives ``v^2 / a`` for every N.
"""

import math
from dataclasses import dataclass

import numpy as np

from ._validation import check_positive, check_quantum_number
from .geometry import derive_geometry

__all__ = [
    "BounceModel",
    "Impulse",
    "BounceTrace",
    "impulse_per_corner",
    "average_force",
    "cycle_average_force",
    "trace_bounces",
]


@dataclass(frozen=True)
class BounceModel:
    speed: float
    spec: object

    def __post_init__(self):
        object.__setattr__(self, "speed", check_positive(self.speed, "speed"))
        if self.spec.n_sides < 3:
            raise ValueError("the bounce model needs n_sides >= 3")

    @property
    def geometry(self):
        return derive_geometry(self.spec)


@dataclass(frozen=True)
class Impulse:
    magnitude: float
    direction: tuple  # inward unit normal at the corner


@dataclass(frozen=True)
class BounceTrace:
    corners: np.ndarray  # (num_bounces + 1, 2)
    momenta: np.ndarray  # outgoing momentum at each corner, same shape


def impulse_per_corner(model, corner=0):
    n_sides = model.spec.n_sides
    angle = 2.0 * math.pi * corner / n_sides
    return Impulse(
        magnitude=2.0 * model.speed * math.sin(math.pi / n_sides),
        direction=(-math.cos(angle), -math.sin(angle)),
    )


def average_force(model):
    """Corner impulse over the side traversal time; equals v^2 / a."""
    travel_time = model.geometry.side_length / model.speed
    return impulse_per_corner(model).magnitude / travel_time


def cycle_average_force(model):
    """N impulses over one full lap of the perimeter."""
    lap_time = model.geometry.perimeter / model.speed
    return model.spec.n_sides * impulse_per_corner(model).magnitude / lap_time


def trace_bounces(model, num_bounces):
    """Corners visited counter-clockwise from (a, 0) and the momentum leaving each."""
    num_bounces = check_quantum_number(num_bounces, minimum=1, name="num_bounces")
    n_sides = model.spec.n_sides
    a = model.spec.circumradius
    j = np.arange(num_bounces + 1)
    angles = 2.0 * math.pi * j / n_sides
    corners = a * np.column_stack([np.cos(angles), np.sin(angles)])
    # chord from corner j to j+1 points along angle (2j+1)pi/N + pi/2
    heading = angles + math.pi / n_sides + 0.5 * math.pi
    momenta = model.speed * np.column_stack([np.cos(heading), np.sin(heading)])
    return BounceTrace(corners=corners, momenta=momenta)


def momentum_turns(trace):
    """Signed rotation between consecutive momenta, wrapped to (-pi, pi]."""
    p = trace.momenta
    ang = np.arctan2(p[:, 1], p[:, 0])
    turn = np.diff(ang)
    return (turn + math.pi) % (2.0 * math.pi) - math.pi
