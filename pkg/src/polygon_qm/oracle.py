"""Finite-difference spectra and a root finder that work without the closed form.

Three discretizations of the side Hamiltonian:

``periodic_q``
    ``-(hbar^2/2) d^2/dq^2`` on ``q in [-c/2, c/2)`` with wraparound, i.e.
    every side carries the same profile.
``dirichlet_well``
    the same operator on ``(0, 2a)`` with zero boundary values (N = 2).
``laplace_beltrami_xi``
    the operator written in the side angle ``theta``,
    ``-(hbar^2/2) (1/w) d/dtheta [f d/dtheta]`` with ``f = cos^2(theta)/b``
    and ``w = b sec^2(theta)``, assembled in flux form and reduced from
    ``K psi = E W psi`` by diagonal congruence.

``periodic_perimeter`` is the whole-perimeter ring used only to compare
with the perimeter extension of the spectrum module.

Error bounds come from the second-order dispersion relation: a mode of
wavenumber k on spacing h has relative error at most ``(k h)^2 / 12``.
"""

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np
from scipy.optimize import brentq

from ._validation import check_grid_points, check_positive
from .eigen import symmetric_eigensolve
from .geometry import derive_geometry
from .wavefunction import closure_signal

__all__ = [
    "OracleKind",
    "OracleProblem",
    "ComputedSpectrum",
    "periodic_q_problem",
    "dirichlet_well_problem",
    "laplace_beltrami_problem",
    "periodic_perimeter_problem",
    "solve_periodic_q",
    "solve_dirichlet_well",
    "solve_laplace_beltrami_xi",
    "solve_periodic_perimeter",
    "find_quantized_k",
]

_EPS = np.finfo(float).eps


class OracleKind(str, Enum):
    PERIODIC_Q = "periodic_q"
    DIRICHLET_WELL = "dirichlet_well"
    LAPLACE_BELTRAMI_XI = "laplace_beltrami_xi"
    PERIODIC_PERIMETER = "periodic_perimeter"

    @property
    def periodic(self):
        return self is not OracleKind.DIRICHLET_WELL


@dataclass(frozen=True)
class ComputedSpectrum:
    eigenvalues: np.ndarray
    grid_points: int
    kind: OracleKind
    estimated_error: np.ndarray

    def level_index(self, n):
        """Eigenvalue indices belonging to quantum number ``n``."""
        if self.kind.periodic:
            return [0] if n == 0 else [2 * n - 1, 2 * n]
        if n < 1:
            raise ValueError("Dirichlet levels start at n=1")
        return [n - 1]

    def level(self, n):
        return float(np.mean(self.eigenvalues[self.level_index(n)]))

    def level_error(self, n):
        return float(np.max(self.estimated_error[self.level_index(n)]))


@dataclass(frozen=True)
class OracleProblem:
    kind: OracleKind
    grid_points: int
    domain: tuple
    hbar: float = 1.0
    # laplace_beltrami_xi only: f at half-grid points i+1/2, w at nodes
    diffusion: np.ndarray = field(default=None, repr=False)
    weight: np.ndarray = field(default=None, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "kind", OracleKind(self.kind))
        check_grid_points(self.grid_points)
        lo, hi = self.domain
        if not hi - lo > 0:
            raise ValueError(f"domain length must be positive, got {self.domain}")
        if self.kind is OracleKind.LAPLACE_BELTRAMI_XI:
            if self.diffusion is None or self.weight is None:
                raise ValueError("laplace_beltrami_xi needs diffusion and weight")
            if np.any(self.diffusion <= 0) or np.any(self.weight <= 0):
                raise ValueError("coefficients must be strictly positive")

    @property
    def length(self):
        return self.domain[1] - self.domain[0]

    @property
    def spacing(self):
        if self.kind is OracleKind.DIRICHLET_WELL:
            return self.length / (self.grid_points + 1)
        return self.length / self.grid_points

    def matrix(self):
        """Symmetric matrix whose eigenvalues are the energies."""
        m = self.grid_points
        h = self.spacing
        scale = 0.5 * self.hbar**2 / h**2
        if self.kind is OracleKind.LAPLACE_BELTRAMI_XI:
            f_right = self.diffusion
            f_left = np.roll(f_right, 1)
            stiff = np.diag(f_left + f_right)
            idx = np.arange(m)
            stiff[idx, (idx + 1) % m] -= f_right
            stiff[(idx + 1) % m, idx] -= f_right
            inv_sqrt_w = 1.0 / np.sqrt(self.weight)
            return scale * stiff * np.outer(inv_sqrt_w, inv_sqrt_w)
        a = 2.0 * np.eye(m) - np.eye(m, k=1) - np.eye(m, k=-1)
        if self.kind.periodic:
            a[0, m - 1] -= 1.0
            a[m - 1, 0] -= 1.0
        return scale * a

    def dispersion_arguments(self):
        """Per-eigenvalue ``k h`` of the matching continuum mode."""
        m = self.grid_points
        i = np.arange(m)
        if self.kind is OracleKind.DIRICHLET_WELL:
            return (i + 1) * math.pi / (m + 1)
        x = 2.0 * math.pi * ((i + 1) // 2) / m
        if self.kind is OracleKind.LAPLACE_BELTRAMI_XI:
            # largest local q-spacing relative to the mean one
            x = x * float(np.max(self.weight) / np.mean(self.weight))
        return x

    def error_bound(self):
        """Dispersion error plus round-off of a backward-stable eigensolve.

        Round-off on eigenvalue E is about eps * ||A|| / E = 4 eps / (k h)^2.
        """
        x = self.dispersion_arguments()
        roundoff = np.zeros_like(x)
        nonzero = x > 0
        roundoff[nonzero] = 40.0 * _EPS / x[nonzero] ** 2
        return x**2 / 12.0 + 10.0 * _EPS * self.grid_points + roundoff

    def solve(self):
        values = symmetric_eigensolve(self.matrix())
        return ComputedSpectrum(
            eigenvalues=values,
            grid_points=self.grid_points,
            kind=self.kind,
            estimated_error=self.error_bound(),
        )


def _polygon_geometry(spec):
    geom = derive_geometry(spec)
    geom.require_sides()
    return geom


def periodic_q_problem(spec, grid_points):
    geom = _polygon_geometry(spec)
    half = 0.5 * geom.side_length
    return OracleProblem(OracleKind.PERIODIC_Q, grid_points, (-half, half), spec.hbar)


def dirichlet_well_problem(width, grid_points, hbar=1.0):
    width = check_positive(width, "width")
    return OracleProblem(OracleKind.DIRICHLET_WELL, grid_points, (0.0, width), hbar)


def laplace_beltrami_problem(spec, grid_points):
    geom = _polygon_geometry(spec)
    grid_points = check_grid_points(grid_points)
    half = geom.half_angle
    b = geom.apothem
    step = 2.0 * half / grid_points
    nodes = -half + step * np.arange(grid_points)
    mids = nodes + 0.5 * step
    return OracleProblem(
        OracleKind.LAPLACE_BELTRAMI_XI,
        grid_points,
        (-half, half),
        spec.hbar,
        diffusion=np.cos(mids) ** 2 / b,
        weight=b / np.cos(nodes) ** 2,
    )


def periodic_perimeter_problem(spec, grid_points):
    geom = _polygon_geometry(spec)
    return OracleProblem(
        OracleKind.PERIODIC_PERIMETER, grid_points, (0.0, geom.perimeter), spec.hbar
    )


def solve_periodic_q(spec, grid_points):
    return periodic_q_problem(spec, grid_points).solve()


def solve_dirichlet_well(width, grid_points, hbar=1.0):
    return dirichlet_well_problem(width, grid_points, hbar).solve()


def solve_laplace_beltrami_xi(spec, grid_points):
    return laplace_beltrami_problem(spec, grid_points).solve()


def solve_periodic_perimeter(spec, grid_points):
    return periodic_perimeter_problem(spec, grid_points).solve()


def find_quantized_k(spec, k_max, resolution=None, xtol=1e-13):
    """Wavenumbers in [0, k_max] where the corner closure of exp(ikq) holds.

    Scans the signed closure mismatch on a uniform grid and polishes each
    sign change with Brent's method. ``resolution`` must not exceed half the
    root spacing ``pi / c``.
    """
    geom = _polygon_geometry(spec)
    k_max = check_positive(k_max, "k_max")
    limit = math.pi / geom.side_length
    if resolution is None:
        resolution = limit / 8.0
    resolution = check_positive(resolution, "resolution")
    if resolution > limit:
        raise ValueError(
            f"resolution {resolution} is coarser than half the root spacing ({limit})"
        )
    steps = max(1, math.ceil(k_max / resolution))
    grid = np.linspace(0.0, k_max, steps + 1)
    signal = closure_signal(grid, spec)

    def g(k):
        return float(closure_signal(k, spec))

    roots = []
    for i in range(steps):
        lo, hi = grid[i], grid[i + 1]
        if signal[i] == 0.0:
            roots.append(float(lo))
        elif signal[i] * signal[i + 1] < 0.0:
            roots.append(brentq(g, lo, hi, xtol=xtol, rtol=4 * _EPS))
    if signal[-1] == 0.0:
        roots.append(float(grid[-1]))
    return roots
