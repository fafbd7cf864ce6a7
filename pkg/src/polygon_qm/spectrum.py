"""Closed-form levels of a unit-mass particle on a regular N-gon.

Single-valuedness across the polygon quantizes the side wavenumber as
``k * a * sin(pi/N) = n * pi`` (equivalently ``k * b * tan(pi/N) = n * pi``),
so ``E_n = n^2 pi^2 hbar^2 / (2 a^2 sin^2(pi/N))``.

Two limits are provided: the circle (``N -> inf`` with ``l = k a / N``) and
the ``N = 2`` segment, an infinite well of width ``2a`` once ``k`` is halved.

``perimeter_spectrum`` is an extension, not part of the polygon model: it is
the free ring of circumference ``N*c``, which contains the polygon levels as
the subset ``j = n*N``. Its levels carry ``mode="perimeter"``.
"""

import math
from dataclasses import dataclass

from ._validation import check_quantum_number
from .geometry import derive_geometry

__all__ = [
    "EnergyLevel",
    "CircleLimitLevel",
    "WellLevel",
    "quantized_k",
    "energy_level",
    "circle_limit_level",
    "circle_limit_bound",
    "well_level",
    "perimeter_spectrum",
]


@dataclass(frozen=True)
class EnergyLevel:
    n: int
    k: float
    energy: float
    degeneracy: int
    mode: str = "polygon"


@dataclass(frozen=True)
class CircleLimitLevel:
    n: int
    n_sides: int
    l: float  # noqa: E741
    energy: float


@dataclass(frozen=True)
class WellLevel:
    n: int
    energy: float


def _require_polygon(spec):
    if spec.n_sides < 3:
        raise ValueError("polygon levels need n_sides >= 3; use well_level for N=2")


def quantized_k(n, spec):
    _require_polygon(spec)
    n = check_quantum_number(n)
    return n * math.pi / (spec.circumradius * math.sin(math.pi / spec.n_sides))


def energy_level(n, spec):
    k = quantized_k(n, spec)
    hbar = spec.hbar
    return EnergyLevel(
        n=int(n),
        k=k,
        energy=0.5 * (hbar * k) ** 2,
        degeneracy=1 if n == 0 else 2,
    )


def circle_limit_level(n, spec):
    """Angular momentum ``l = k a / N`` and its rotor energy ``hbar^2 l^2 / 2a^2``."""
    n = check_quantum_number(n)
    big_n = spec.n_sides
    half = math.pi / big_n
    l = n * half / math.sin(half)  # noqa: E741
    a = spec.circumradius
    return CircleLimitLevel(
        n=n, n_sides=big_n, l=l, energy=(spec.hbar * l) ** 2 / (2.0 * a * a)
    )


def circle_limit_bound(n_sides):
    """Upper bound on ``l/n - 1`` for N >= 10."""
    return math.pi**2 / (5.0 * n_sides**2)


def well_level(n, spec):
    if spec.n_sides != 2:
        raise ValueError(f"well_level needs n_sides=2, got {spec.n_sides}")
    n = check_quantum_number(n, minimum=1)
    a = spec.circumradius
    return WellLevel(n=n, energy=(n * math.pi * spec.hbar) ** 2 / (8.0 * a * a))


def well_level_from_polygon_formula(n, spec):
    """The polygon energy formula at N=2 with the wavenumber halved."""
    if spec.n_sides != 2:
        raise ValueError(f"needs n_sides=2, got {spec.n_sides}")
    n = check_quantum_number(n, minimum=1)
    k = n * math.pi / (spec.circumradius * math.sin(math.pi / 2))
    return 0.5 * (spec.hbar * 0.5 * k) ** 2


def perimeter_spectrum(j, spec):
    """Extension: level ``j`` of a free ring with the polygon's perimeter."""
    _require_polygon(spec)
    j = check_quantum_number(j, name="j")
    perimeter = derive_geometry(spec).perimeter
    k = 2.0 * math.pi * j / perimeter
    return EnergyLevel(
        n=j,
        k=k,
        energy=0.5 * (spec.hbar * k) ** 2,
        degeneracy=1 if j == 0 else 2,
        mode="perimeter",
    )
