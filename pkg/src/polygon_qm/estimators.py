"""scikit-learn style front ends.

The model has no training data: ``fit`` validates the hyper-parameters and
precomputes whatever the estimator needs (geometry, normalization constant,
a finite-difference spectrum). ``X`` is accepted and ignored so the
estimators drop into pipelines and ``clone``/``get_params`` work as usual.
"""

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted, column_or_1d

from ._validation import check_grid_points
from .geometry import PhysicalConstants, PolygonSpec, derive_geometry
from .oracle import (
    OracleKind,
    dirichlet_well_problem,
    laplace_beltrami_problem,
    periodic_perimeter_problem,
    periodic_q_problem,
)
from .spectrum import energy_level, well_level
from .wavefunction import Form, NormConvention, evaluate, make_wavefunction, sample


def _quantum_numbers(X):
    n = column_or_1d(np.asarray(X), warn=False)
    if n.dtype.kind not in "iu":
        if not np.all(np.equal(np.mod(n, 1), 0)):
            raise ValueError("quantum numbers must be integers")
        n = n.astype(int)
    if np.any(n < 0):
        raise ValueError("quantum numbers must be non-negative")
    return n


class _PolygonParams:
    def _make_spec(self):
        return PolygonSpec(
            n_sides=self.n_sides,
            circumradius=self.radius,
            constants=PhysicalConstants(hbar=self.hbar),
        )


class PolygonSpectrum(_PolygonParams, BaseEstimator):
    """Closed-form energies; ``predict`` maps quantum numbers to E_n.

    For ``n_sides=2`` the levels are those of the infinite well of width 2a.

    >>> PolygonSpectrum(n_sides=4).fit().predict([1])
    array([9.8696044])
    """

    def __init__(self, n_sides=6, radius=1.0, hbar=1.0):
        self.n_sides = n_sides
        self.radius = radius
        self.hbar = hbar

    def fit(self, X=None, y=None):
        self.spec_ = self._make_spec()
        self.geometry_ = derive_geometry(self.spec_)
        return self

    def levels(self, X):
        check_is_fitted(self)
        n = _quantum_numbers(X)
        if self.spec_.degenerate_parametrization:
            return [well_level(int(i), self.spec_) for i in n]
        return [energy_level(int(i), self.spec_) for i in n]

    def predict(self, X):
        return np.array([lvl.energy for lvl in self.levels(X)])


class PolygonWavefunction(_PolygonParams, TransformerMixin, BaseEstimator):
    """Normalized eigenfunction; ``transform`` maps polar angles to amplitudes."""

    def __init__(
        self,
        n_sides=6,
        radius=1.0,
        hbar=1.0,
        n=1,
        form="plane_plus",
        norm_convention="xi_measure",
        quadrature_points=512,
    ):
        self.n_sides = n_sides
        self.radius = radius
        self.hbar = hbar
        self.n = n
        self.form = form
        self.norm_convention = norm_convention
        self.quadrature_points = quadrature_points

    def fit(self, X=None, y=None):
        self.spec_ = self._make_spec()
        self.wavefunction_ = make_wavefunction(
            self.n,
            Form(self.form),
            self.spec_,
            NormConvention(self.norm_convention),
            self.quadrature_points,
        )
        self.norm_constant_ = self.wavefunction_.norm_constant
        return self

    def transform(self, X):
        check_is_fitted(self)
        xi = column_or_1d(np.asarray(X, dtype=float), warn=False)
        return evaluate(self.wavefunction_, xi, self.spec_)

    def sample(self, samples_per_side=100):
        check_is_fitted(self)
        return sample(self.wavefunction_, samples_per_side, self.spec_)


_BUILDERS = {
    OracleKind.PERIODIC_Q: periodic_q_problem,
    OracleKind.LAPLACE_BELTRAMI_XI: laplace_beltrami_problem,
    OracleKind.PERIODIC_PERIMETER: periodic_perimeter_problem,
}


class FiniteDifferenceOracle(_PolygonParams, BaseEstimator):
    """Finite-difference spectrum; ``predict`` maps quantum numbers to levels.

    ``kind="dirichlet_well"`` discretizes the well of width ``2 * radius``
    regardless of ``n_sides``.
    """

    def __init__(self, kind="periodic_q", n_sides=6, radius=1.0, hbar=1.0, grid_points=1024):
        self.kind = kind
        self.n_sides = n_sides
        self.radius = radius
        self.hbar = hbar
        self.grid_points = grid_points

    def fit(self, X=None, y=None):
        kind = OracleKind(self.kind)
        grid_points = check_grid_points(self.grid_points)
        if kind is OracleKind.DIRICHLET_WELL:
            spec = PolygonSpec(2, self.radius, PhysicalConstants(hbar=self.hbar))
            problem = dirichlet_well_problem(2.0 * spec.circumradius, grid_points, spec.hbar)
        else:
            spec = self._make_spec()
            problem = _BUILDERS[kind](spec, grid_points)
        self.spec_ = spec
        self.problem_ = problem
        self.spectrum_ = problem.solve()
        self.eigenvalues_ = self.spectrum_.eigenvalues
        self.estimated_error_ = self.spectrum_.estimated_error
        return self

    def predict(self, X):
        check_is_fitted(self)
        return np.array([self.spectrum_.level(int(i)) for i in _quantum_numbers(X)])
