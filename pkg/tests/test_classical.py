import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from polygon_qm import BounceModel, PolygonSpec, average_force, impulse_per_corner, trace_bounces
from polygon_qm.classical import cycle_average_force, momentum_turns


def test_impulse_examples():
    assert impulse_per_corner(BounceModel(1.0, PolygonSpec(6))).magnitude == pytest.approx(1.0, rel=1e-15)
    assert impulse_per_corner(BounceModel(2.0, PolygonSpec(4))).magnitude == pytest.approx(2 * math.sqrt(2), rel=1e-15)
    assert impulse_per_corner(BounceModel(1.0, PolygonSpec(10**6))).magnitude < 1e-5


def test_impulse_is_velocity_change_and_points_inward():
    model = BounceModel(1.7, PolygonSpec(7, 1.3))
    trace = trace_bounces(model, 7)
    for j in range(1, 7):
        imp = impulse_per_corner(model, corner=j)
        dp = trace.momenta[j] - trace.momenta[j - 1]
        assert np.allclose(dp, imp.magnitude * np.array(imp.direction), atol=1e-13)
        radial = trace.corners[j] / np.linalg.norm(trace.corners[j])
        assert np.dot(imp.direction, radial) == pytest.approx(-1.0)


@pytest.mark.parametrize(
    "n_sides, v, a, expected", [(6, 1.0, 1.0, 1.0), (1000, 3.0, 2.0, 4.5)]
)
def test_average_force_examples(n_sides, v, a, expected):
    assert average_force(BounceModel(v, PolygonSpec(n_sides, a))) == pytest.approx(expected, rel=1e-13)


def test_small_speed_limit():
    assert average_force(BounceModel(1e-9, PolygonSpec(5))) < 1e-17
    with pytest.raises(ValueError):
        BounceModel(0.0, PolygonSpec(5))
    with pytest.raises(ValueError):
        BounceModel(1.0, PolygonSpec(2))


@given(
    n_sides=st.integers(3, 10**5),
    v=st.floats(1e-3, 1e3),
    a=st.floats(1e-3, 1e3),
)
def test_centripetal_identity(n_sides, v, a):
    model = BounceModel(v, PolygonSpec(n_sides, a))
    assert abs(average_force(model) / (v * v / a) - 1) < 1e-13
    assert abs(cycle_average_force(model) / (v * v / a) - 1) < 1e-13


@pytest.mark.parametrize("n_sides", [3, 5, 6, 11])
def test_trace(n_sides):
    model = BounceModel(2.5, PolygonSpec(n_sides, 1.5))
    trace = trace_bounces(model, n_sides)
    assert trace.corners.shape == (n_sides + 1, 2)
    assert np.allclose(np.linalg.norm(trace.corners, axis=1), 1.5, rtol=0, atol=1e-12)
    assert np.allclose(trace.corners[-1], trace.corners[0], atol=1e-12)
    assert np.allclose(np.linalg.norm(trace.momenta, axis=1), 2.5, rtol=1e-13)
    assert np.allclose(momentum_turns(trace), 2 * math.pi / n_sides, atol=1e-12)
    # each momentum points from its corner to the next
    chords = np.diff(trace.corners, axis=0)
    unit = chords / np.linalg.norm(chords, axis=1)[:, None]
    assert np.allclose(unit * 2.5, trace.momenta[:-1], atol=1e-12)


def test_hexagon_vertices():
    trace = trace_bounces(BounceModel(1.0, PolygonSpec(6)), 6)
    expected = [(math.cos(j * math.pi / 3), math.sin(j * math.pi / 3)) for j in range(7)]
    assert np.allclose(trace.corners, expected, atol=1e-15)
