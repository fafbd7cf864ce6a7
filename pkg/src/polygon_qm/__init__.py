"""Quantum particle on a regular N-gon: closed-form levels and eigenfunctions,
finite-difference cross-checks, limits, and Newton's classical bounce model."""

from .classical import BounceModel, average_force, impulse_per_corner, trace_bounces
from .eigen import symmetric_eigensolve
from .estimators import FiniteDifferenceOracle, PolygonSpectrum, PolygonWavefunction
from .geometry import (
    PhysicalConstants,
    PolygonGeometry,
    PolygonSpec,
    SideCoordinate,
    arc_position,
    derive_geometry,
    locate,
    q_of_xi,
    radial,
    xi_of_q,
)
from .oracle import (
    ComputedSpectrum,
    OracleProblem,
    find_quantized_k,
    solve_dirichlet_well,
    solve_laplace_beltrami_xi,
    solve_periodic_q,
)
from .spectrum import (
    CircleLimitLevel,
    EnergyLevel,
    WellLevel,
    circle_limit_level,
    energy_level,
    perimeter_spectrum,
    quantized_k,
    well_level,
)
from .wavefunction import (
    Form,
    NormConvention,
    WavefunctionSample,
    WavefunctionSpec,
    check_continuity,
    evaluate,
    make_wavefunction,
    normalize,
    sample,
)

__version__ = "0.1.0"
