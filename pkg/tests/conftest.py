import functools

import pytest

from polygon_qm import PolygonSpec
from polygon_qm.oracle import solve_laplace_beltrami_xi, solve_periodic_q


@functools.lru_cache(maxsize=None)
def periodic_spectrum(n_sides, grid_points, radius=1.0):
    return solve_periodic_q(PolygonSpec(n_sides, radius), grid_points)


@functools.lru_cache(maxsize=None)
def lb_spectrum(n_sides, grid_points, radius=1.0):
    return solve_laplace_beltrami_xi(PolygonSpec(n_sides, radius), grid_points)


@pytest.fixture
def hexagon():
    return PolygonSpec(6, 1.0)


_ACCEPTANCE = []


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance" not in report.nodeid:
        return
    props = dict(report.user_properties)
    if "criterion" in props:
        _ACCEPTANCE.append((props["criterion"], report.outcome, props.get("measured", "")))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, outcome, measured in sorted(_ACCEPTANCE, key=lambda r: int(r[0].split(".")[0])):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{status}] {label}  {measured}")
