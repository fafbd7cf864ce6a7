"""Piecewise eigenfunctions on the polygon.

Every side carries the same profile in its flattened coordinate ``q``:

* ``plane_plus`` / ``plane_minus``: ``A exp(+-i k q)``
* ``symmetric``: ``A_s cos(k q)``
* ``antisymmetric``: ``A_a sin(k q)``

with ``k`` one of the quantized wavenumbers. Normalization integrates
``|psi|^2`` over all sides either in the polar angle (``xi_measure``, the
default, giving ``A = 1/sqrt(2 pi)`` for plane waves) or in arc length
(``arc_measure``, weight ``dq = b sec^2(theta) dtheta``).
"""

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from ._validation import check_quantum_number
from .geometry import derive_geometry, side_arrays
from .spectrum import EnergyLevel, energy_level, quantized_k

__all__ = [
    "Form",
    "NormConvention",
    "WavefunctionSpec",
    "WavefunctionSample",
    "make_wavefunction",
    "evaluate",
    "normalize",
    "check_continuity",
    "sample",
    "count_zero_crossings",
    "circle_limit_wavefunction",
]

ZERO_DEADBAND = 1e-14
_PANEL_NODES = 64


class Form(str, Enum):
    PLANE_PLUS = "plane_plus"
    PLANE_MINUS = "plane_minus"
    SYMMETRIC = "symmetric"
    ANTISYMMETRIC = "antisymmetric"


class NormConvention(str, Enum):
    XI_MEASURE = "xi_measure"
    ARC_MEASURE = "arc_measure"


@dataclass(frozen=True)
class WavefunctionSpec:
    level: EnergyLevel
    form: Form
    norm_constant: float
    norm_convention: NormConvention = NormConvention.XI_MEASURE

    def __post_init__(self):
        object.__setattr__(self, "form", Form(self.form))
        object.__setattr__(self, "norm_convention", NormConvention(self.norm_convention))
        if self.form is Form.ANTISYMMETRIC and self.level.n < 1:
            raise ValueError("antisymmetric form vanishes identically for n=0")
        if not self.norm_constant > 0:
            raise ValueError("norm_constant must be positive")


@dataclass(frozen=True)
class WavefunctionSample:
    xi: float
    side_index: int
    q: float
    s: float
    re: float
    im: float


def _profile(form, phase):
    """Side profile as a function of the phase ``k q``."""
    if form is Form.PLANE_PLUS:
        return np.exp(1j * phase)
    if form is Form.PLANE_MINUS:
        return np.exp(-1j * phase)
    if form is Form.SYMMETRIC:
        return np.cos(phase) + 0j
    return np.sin(phase) + 0j


def _profile_derivative(form, phase):
    """d(profile)/d(phase); continuity of this is continuity of dpsi/dq up to k."""
    if form is Form.PLANE_PLUS:
        return 1j * np.exp(1j * phase)
    if form is Form.PLANE_MINUS:
        return -1j * np.exp(-1j * phase)
    if form is Form.SYMMETRIC:
        return -np.sin(phase) + 0j
    return np.cos(phase) + 0j


def _gauss_panels(lo, hi, points):
    """Composite Gauss-Legendre nodes/weights with at least ``points`` nodes."""
    panels = max(1, math.ceil(points / _PANEL_NODES))
    x, w = np.polynomial.legendre.leggauss(_PANEL_NODES)
    edges = np.linspace(lo, hi, panels + 1)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[1:] + edges[:-1])
    nodes = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    return nodes, weights


def _side_integral(form, k, geom, convention, quadrature_points):
    """Integral of |profile|^2 over one side in the chosen measure."""
    theta, w = _gauss_panels(-geom.half_angle, geom.half_angle, quadrature_points)
    q = geom.apothem * np.tan(theta)
    density = np.abs(_profile(form, k * q)) ** 2
    if convention is NormConvention.ARC_MEASURE:
        density = density * geom.apothem / np.cos(theta) ** 2
    return float(np.dot(w, density))


def normalize(
    form,
    level,
    spec,
    convention=NormConvention.XI_MEASURE,
    quadrature_points=512,
):
    """Constant making the sum over sides of the integral of |psi|^2 equal 1."""
    form = Form(form)
    convention = NormConvention(convention)
    if form is Form.ANTISYMMETRIC and level.n < 1:
        raise ValueError("antisymmetric form with n=0 is not normalizable")
    if quadrature_points < 512:
        raise ValueError("quadrature_points must be >= 512 per side")
    geom = derive_geometry(spec)
    geom.require_sides()
    total = spec.n_sides * _side_integral(form, level.k, geom, convention, quadrature_points)
    return 1.0 / math.sqrt(total)


def make_wavefunction(
    n,
    form,
    spec,
    convention=NormConvention.XI_MEASURE,
    quadrature_points=512,
):
    level = energy_level(check_quantum_number(n), spec)
    form = Form(form)
    const = normalize(form, level, spec, convention, quadrature_points)
    return WavefunctionSpec(
        level=level, form=form, norm_constant=const, norm_convention=convention
    )


def _check_quantized(level, spec):
    if level.mode != "polygon":
        raise ValueError(f"level mode {level.mode!r} is not a polygon eigenstate")
    expected = quantized_k(level.n, spec)
    if abs(level.k - expected) > 1e-12 * max(1.0, expected):
        raise ValueError(
            f"k={level.k} is not quantized (expected {expected} for n={level.n}); "
            "use check_continuity to probe arbitrary k"
        )


def evaluate(wf, xi, spec):
    """Amplitude at polar angle(s) ``xi``; scalar in, complex scalar out."""
    _check_quantized(wf.level, spec)
    geom = derive_geometry(spec)
    scalar = np.ndim(xi) == 0
    _, _, q, _ = side_arrays(np.atleast_1d(xi), geom)
    psi = wf.norm_constant * _profile(wf.form, wf.level.k * q)
    return complex(psi[0]) if scalar else psi


def evaluate_on_side(wf, xi, side_index, spec):
    """Amplitude of the side-``side_index`` branch at ``xi`` (may lie off that side)."""
    _check_quantized(wf.level, spec)
    geom = derive_geometry(spec)
    theta = np.asarray(xi, dtype=float) - (2 * side_index - 1) * geom.half_angle
    return wf.norm_constant * _profile(wf.form, wf.level.k * geom.apothem * np.tan(theta))


def check_continuity(form, k, spec):
    """Largest jump of psi (or of dpsi/d(kq)) at any corner, unit amplitude.

    Corners ``1..N-1`` compare side ``m`` at its upper end with side ``m+1`` at
    its lower end; the closure compares side 1 at ``xi = 0`` with side N at
    ``xi = 2 pi``. Equals ``2|sin(k c / 2)|`` for every form.
    """
    form = Form(form)
    if not k >= 0:
        raise ValueError(f"k must be >= 0, got {k}")
    geom = derive_geometry(spec)
    geom.require_sides()
    big_n = spec.n_sides
    half = geom.half_angle
    b = geom.apothem

    corners = 2.0 * half * np.arange(1, big_n)
    m = np.arange(1, big_n)
    q_upper = b * np.tan(corners - (2 * m - 1) * half)
    q_lower = b * np.tan(corners - (2 * (m + 1) - 1) * half)
    # closure: side N at 2*pi against side 1 at 0
    q_upper = np.append(q_upper, b * np.tan(2.0 * math.pi - (2 * big_n - 1) * half))
    q_lower = np.append(q_lower, b * np.tan(0.0 - half))

    jump = np.abs(_profile(form, k * q_upper) - _profile(form, k * q_lower))
    slope_jump = np.abs(
        _profile_derivative(form, k * q_upper) - _profile_derivative(form, k * q_lower)
    )
    return float(max(jump.max(), slope_jump.max()))


def closure_signal(k, spec):
    """Signed corner mismatch of the raw ``exp(ikq)`` branch at the closure.

    ``Im(psi_N(2 pi) - psi_1(0)) / 2`` for unit amplitude; it changes sign
    exactly where the closure mismatch vanishes.
    """
    geom = derive_geometry(spec)
    geom.require_sides()
    half = geom.half_angle
    b = geom.apothem
    q_end = b * np.tan(2.0 * math.pi - (2 * spec.n_sides - 1) * half)
    q_start = b * np.tan(0.0 - half)
    k = np.asarray(k, dtype=float)
    return 0.5 * np.imag(np.exp(1j * k * q_end) - np.exp(1j * k * q_start))


def sample(wf, samples_per_side, spec):
    """Evenly spaced samples in xi, ``samples_per_side`` per side, ordered by s.

    Each side contributes its lower corner and excludes its upper one, so the
    rows cover s in [0, L) once. With an even count the side midpoint is hit
    exactly.
    """
    xi, m, q, s, psi = sample_arrays(wf, samples_per_side, spec)
    return [
        WavefunctionSample(
            xi=float(xi[i]),
            side_index=int(m[i]),
            q=float(q[i]),
            s=float(s[i]),
            re=float(psi[i].real),
            im=float(psi[i].imag),
        )
        for i in range(xi.size)
    ]


def sample_arrays(wf, samples_per_side, spec):
    samples_per_side = check_quantum_number(samples_per_side, minimum=2, name="samples_per_side")
    _check_quantized(wf.level, spec)
    geom = derive_geometry(spec)
    geom.require_sides()
    big_n = spec.n_sides
    width = 2.0 * geom.half_angle
    j = np.arange(samples_per_side)
    m = np.repeat(np.arange(1, big_n + 1), samples_per_side)
    offset = np.tile(j, big_n) * (width / samples_per_side)
    xi = (m - 1) * width + offset
    theta = offset - geom.half_angle
    q = geom.apothem * np.tan(theta)
    start = (m - 1) * geom.side_length
    s = np.maximum(start, start + q + 0.5 * geom.side_length)
    psi = wf.norm_constant * _profile(wf.form, wf.level.k * q)
    if wf.form in (Form.SYMMETRIC, Form.ANTISYMMETRIC):
        psi = psi.real + 0j
    return xi, m, q, s, psi


def count_zero_crossings(values, deadband=ZERO_DEADBAND):
    """Sign changes along ``values``, ignoring entries with ``|v| <= deadband``."""
    v = np.asarray(values, dtype=float)
    signs = np.sign(v[np.abs(v) > deadband])
    return int(np.count_nonzero(signs[1:] != signs[:-1]))


def circle_limit_wavefunction(n, phi):
    """Rotor eigenfunction ``exp(i n phi) / sqrt(2 pi)`` in the rescaled angle."""
    return np.exp(1j * n * np.asarray(phi, dtype=float)) / math.sqrt(2.0 * math.pi)


def norm_integral(wf, spec, quadrature_points=512):
    """Quadrature of |psi|^2 over all sides in ``wf``'s own convention."""
    geom = derive_geometry(spec)
    geom.require_sides()
    side = _side_integral(wf.form, wf.level.k, geom, wf.norm_convention, quadrature_points)
    return spec.n_sides * side * wf.norm_constant**2


def inner_product(wf1, wf2, spec, convention=None, quadrature_points=2048):
    """Sum over sides of the integral of conj(psi1) psi2.

    ``convention`` defaults to ``wf1``'s. Plane waves with different ``n``
    are orthogonal only in ``arc_measure``; in ``xi_measure`` the
    non-uniform weight leaves a finite overlap.
    """
    convention = NormConvention(convention or wf1.norm_convention)
    geom = derive_geometry(spec)
    geom.require_sides()
    theta, w = _gauss_panels(-geom.half_angle, geom.half_angle, quadrature_points)
    q = geom.apothem * np.tan(theta)
    if convention is NormConvention.ARC_MEASURE:
        w = w * geom.apothem / np.cos(theta) ** 2
    p1 = wf1.norm_constant * _profile(wf1.form, wf1.level.k * q)
    p2 = wf2.norm_constant * _profile(wf2.form, wf2.level.k * q)
    return complex(spec.n_sides * np.dot(w, np.conj(p1) * p2))
