import csv
import io
import json
import math
import subprocess
import sys

import pytest

from polygon_qm import cli
from polygon_qm.wavefunction import count_zero_crossings


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    status = cli.main(list(argv), stdout=out, stderr=err)
    return status, out.getvalue(), err.getvalue()


def read_csv(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_spectrum_rows():
    status, out, _ = run_cli("spectrum", "--n-sides", "6", "--radius", "1", "--levels", "3")
    assert status == 0
    rows = read_csv(out)
    expected = [(1, 6.2831853, 19.7392088), (2, 12.5663706, 78.9568352), (3, 18.8495559, 177.6528792)]
    assert len(rows) == 3
    for row, (n, k, e) in zip(rows, expected):
        assert int(row["n"]) == n
        assert float(row["k"]) == pytest.approx(k, abs=1e-7)
        assert float(row["energy"]) == pytest.approx(e, abs=1e-7)


def test_spectrum_extension_column():
    _, out, _ = run_cli("spectrum", "--n-sides", "4", "--levels", "2", "--extension", "perimeter")
    for row in read_csv(out):
        assert int(row["perimeter_j"]) == 4 * int(row["n"])
        assert float(row["perimeter_energy"]) == pytest.approx(float(row["energy"]), rel=1e-9)


def test_spectrum_well_mode():
    _, out, _ = run_cli("spectrum", "--n-sides", "2", "--levels", "2", "--format", "json")
    doc = json.loads(out)
    assert doc["metadata"]["mode"] == "well"
    assert doc["rows"][0]["energy"] == pytest.approx(math.pi**2 / 8)


def test_precision_flag():
    _, out, _ = run_cli("spectrum", "--levels", "1", "--precision", "4")
    assert read_csv(out)[0]["energy"] == "19.74"


def test_wavefunction_hexagon():
    status, out, _ = run_cli("wavefunction", "--n-sides", "6", "--n", "1", "--form", "symmetric", "--samples", "100")
    assert status == 0
    assert out.splitlines()[0] == "xi,side_index,q,s,re,im"
    rows = read_csv(out)
    assert len(rows) == 600
    assert count_zero_crossings([float(r["re"]) for r in rows]) == 12


def test_wavefunction_json_metadata():
    _, out, _ = run_cli("wavefunction", "--n", "2", "--form", "antisymmetric", "--samples", "8", "--format", "json")
    doc = json.loads(out)
    meta = doc["metadata"]
    for key in ("N", "a", "hbar", "n", "form", "norm_convention", "norm_constant"):
        assert key in meta
    assert meta["form"] == "antisymmetric" and meta["n"] == 2
    assert list(doc["rows"][0]) == cli.SAMPLE_COLUMNS
    assert len(doc["rows"]) == 48


@pytest.mark.parametrize(
    "argv",
    [
        ["spectrum", "--levels", "4", "--extension", "perimeter"],
        ["wavefunction", "--n", "2", "--samples", "20"],
        ["limits", "--n-values", "10,100", "--grid", "200"],
        ["classical", "--n-sides", "5", "--speed", "2"],
    ],
)
def test_json_metadata_reproduces_run(argv):
    _, first, _ = run_cli(*argv, "--format", "json")
    _, again, _ = run_cli(*argv, "--format", "json")
    assert first == again
    replay = json.loads(first)["metadata"]["argv"]
    _, replayed, _ = run_cli(*replay)
    assert replayed == first


def test_run_id_only_when_requested():
    _, out, _ = run_cli("spectrum", "--format", "json")
    assert "run_id" not in json.loads(out)["metadata"]
    _, out, _ = run_cli("spectrum", "--format", "json", "--run-id", "abc")
    assert json.loads(out)["metadata"]["run_id"] == "abc"


def test_output_file(tmp_path):
    path = tmp_path / "trace.csv"
    status, out, _ = run_cli("classical", "--n-sides", "6", "--output", str(path))
    assert status == 0 and out == ""
    rows = read_csv(path.read_text())
    assert list(rows[0]) == ["x", "y", "px", "py"]
    assert len(rows) == 7
    for r in rows:
        assert math.hypot(float(r["x"]), float(r["y"])) == pytest.approx(1.0, abs=1e-9)


def test_classical_json_check():
    _, out, _ = run_cli("classical", "--n-sides", "1000", "--speed", "3", "--radius", "2", "--format", "json")
    meta = json.loads(out)["metadata"]
    assert meta["average_force"] == pytest.approx(4.5, rel=1e-13)
    assert meta["rel_error"] < 1e-13


def test_limits_table():
    _, out, _ = run_cli("limits", "--n-values", "10,100,10000", "--levels", "2")
    rows = read_csv(out)
    circle = [r for r in rows if r["case"] == "circle_l"]
    assert len(circle) == 6
    for r in circle:
        assert abs(float(r["rel_deviation"])) <= float(r["bound"])
    well = [r for r in rows if r["case"] == "well_fd"]
    assert abs(float(well[0]["rel_deviation"])) < 1e-6


@pytest.mark.parametrize(
    "argv",
    [
        ["spectrum", "--n-sides", "1"],
        ["spectrum", "--radius", "-2"],
        ["spectrum", "--hbar", "0"],
        ["spectrum", "--levels", "0"],
        ["wavefunction", "--n", "0", "--form", "antisymmetric"],
        ["wavefunction", "--n-sides", "2"],
        ["wavefunction", "--samples", "1"],
        ["verify", "--grid", "8"],
        ["limits", "--n-values", "a,b"],
        ["classical", "--speed", "0"],
        ["bogus"],
        ["spectrum", "--format", "xml"],
    ],
)
def test_validation_errors_exit_1(argv):
    status, out, err = run_cli(*argv)
    assert status == 1
    assert out == ""
    payload = json.loads(err)
    assert payload["error"] in ("usage", "validation") and payload["message"]


def test_verify_failure_exit_2(monkeypatch):
    monkeypatch.setattr(cli, "verify_rows", lambda spec, grid, suites: [["x", "forced", 1.0, 0.0, False]])
    status, out, err = run_cli("verify", "--suite", "roots")
    assert status == 2
    assert json.loads(err)["error"] == "verification"
    assert read_csv(out)[0]["passed"] == "false"


def test_verify_quick_suites():
    status, out, _ = run_cli("verify", "--suite", "roots", "--n-sides", "5")
    assert status == 0
    for suite in ("continuity", "normalization", "classical", "well"):
        status, out, _ = run_cli("verify", "--suite", suite, "--n-sides", "3")
        assert status == 0, out


@pytest.mark.slow
def test_verify_all():
    status, out, _ = run_cli("verify", "--suite", "all", "--grid", "1024")
    assert status == 0
    rows = read_csv(out)
    assert {r["suite"] for r in rows} == set(cli.VERIFY_SUITES)
    assert all(r["passed"] == "true" for r in rows)
    for r in rows:
        assert float(r["measured"]) <= float(r["bound"])


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "polygon_qm", "spectrum", "--levels", "1"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("n,k,energy,degeneracy")
