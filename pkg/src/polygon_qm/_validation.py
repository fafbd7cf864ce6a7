"""Input checks shared by the functional API, the estimators and the CLI.

Everything here raises ``ValueError`` (or ``TypeError`` for wrong types);
the CLI maps both to exit status 1.
"""

import math
import numbers

import numpy as np


def check_n_sides(n_sides, *, allow_degenerate=True):
    if isinstance(n_sides, bool) or not isinstance(n_sides, numbers.Integral):
        raise TypeError(f"n_sides must be an integer, got {n_sides!r}")
    n_sides = int(n_sides)
    if n_sides < 2:
        raise ValueError(f"n_sides must be >= 2, got {n_sides}")
    if n_sides == 2 and not allow_degenerate:
        raise ValueError(
            "n_sides=2 has no side parametrization; use the well-level API"
        )
    return n_sides


def check_positive(value, name):
    if isinstance(value, bool) or not isinstance(value, numbers.Real):
        raise TypeError(f"{name} must be a real number, got {value!r}")
    value = float(value)
    if not math.isfinite(value) or value <= 0.0:
        raise ValueError(f"{name} must be finite and > 0, got {value}")
    return value


def check_quantum_number(n, *, minimum=0, name="n"):
    if isinstance(n, bool) or not isinstance(n, numbers.Integral):
        raise TypeError(f"{name} must be an integer, got {n!r}")
    n = int(n)
    if n < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {n}")
    return n


def check_grid_points(grid_points, *, minimum=16, maximum=4096):
    grid_points = check_quantum_number(grid_points, minimum=minimum, name="grid_points")
    if grid_points > maximum:
        raise ValueError(f"grid_points must be <= {maximum}, got {grid_points}")
    return grid_points


def check_angles(xi):
    """Return ``xi`` as a float array, rejecting values outside [0, 2*pi]."""
    xi = np.asarray(xi, dtype=float)
    if not np.all(np.isfinite(xi)):
        raise ValueError("xi must be finite")
    if np.any(xi < 0.0) or np.any(xi > 2.0 * math.pi):
        raise ValueError("xi must lie in [0, 2*pi]; reduce modulo 2*pi first")
    return xi


def check_symmetric(matrix, tol=1e-12):
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    scale = max(1.0, float(np.max(np.abs(a)))) if a.size else 1.0
    if a.size and np.max(np.abs(a - a.T)) > tol * scale:
        raise ValueError("matrix is not symmetric")
    return a
