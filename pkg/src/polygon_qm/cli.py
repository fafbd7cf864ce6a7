"""Command-line entry point: ``polygon-qm <command> [options]``.

Commands emit a single table as CSV (header row, '.' decimals, 10
significant digits unless ``--precision``) or JSON (``{"metadata", "rows"}``).
The JSON metadata carries an ``argv`` list that reproduces the run.

Exit codes: 0 success, 1 invalid input, 2 a verification check failed.
"""

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field

import numpy as np

from . import classical, oracle, spectrum, wavefunction
from .geometry import PhysicalConstants, PolygonSpec, derive_geometry

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_VERIFY_FAILED = 2

SAMPLE_COLUMNS = ["xi", "side_index", "q", "s", "re", "im"]
TRACE_COLUMNS = ["x", "y", "px", "py"]
VERIFY_SUITES = [
    "periodic",
    "laplace_beltrami",
    "well",
    "roots",
    "continuity",
    "normalization",
    "convergence",
    "classical",
]


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class RunConfig:
    command: str
    n_sides: int = 6
    radius: float = 1.0
    hbar: float = 1.0
    format: str = "csv"
    output: str = "-"
    precision: int = 10
    run_id: str = None
    options: dict = field(default_factory=dict)

    @property
    def spec(self):
        return PolygonSpec(self.n_sides, self.radius, PhysicalConstants(hbar=self.hbar))

    def to_argv(self):
        argv = [
            self.command,
            "--n-sides", str(self.n_sides),
            "--radius", repr(self.radius),
            "--hbar", repr(self.hbar),
            "--format", self.format,
            "--precision", str(self.precision),
        ]
        if self.run_id is not None:
            argv += ["--run-id", self.run_id]
        for key, value in self.options.items():
            if value is None:
                continue
            flag = "--" + key.replace("_", "-")
            if isinstance(value, list):
                value = ",".join(str(v) for v in value)
            argv += [flag, str(value)]
        return argv


def _int_list(text):
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser():
    parser = _Parser(prog="polygon-qm", description="Quantum particle on a regular N-gon.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = _Parser(add_help=False)
    common.add_argument("--n-sides", type=int, default=6)
    common.add_argument("--radius", type=float, default=1.0)
    common.add_argument("--hbar", type=float, default=1.0)
    common.add_argument("--format", choices=["csv", "json"], default="csv")
    common.add_argument("--output", default="-", help="file path, '-' for stdout")
    common.add_argument("--precision", type=int, default=10)
    common.add_argument("--run-id", default=None, help="recorded in JSON metadata only")

    p = sub.add_parser("spectrum", parents=[common], help="closed-form levels")
    p.add_argument("--levels", type=int, default=5)
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--extension", choices=["perimeter"], default=None)

    p = sub.add_parser("wavefunction", parents=[common], help="sampled eigenfunction")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--form", choices=[f.value for f in wavefunction.Form], default="symmetric")
    p.add_argument("--samples", type=int, default=100, help="samples per side")
    p.add_argument(
        "--norm-convention",
        choices=[c.value for c in wavefunction.NormConvention],
        default="xi_measure",
    )

    p = sub.add_parser("verify", parents=[common], help="oracle cross-checks")
    p.add_argument("--suite", choices=["all"] + VERIFY_SUITES, default="all")
    p.add_argument("--grid", type=int, default=1024)

    p = sub.add_parser("limits", parents=[common], help="circle and N=2 limits")
    p.add_argument("--n-values", type=_int_list, default=[10, 100, 1000, 10000])
    p.add_argument("--levels", type=int, default=2)
    p.add_argument("--grid", type=int, default=2000)

    p = sub.add_parser("classical", parents=[common], help="Newton bounce trace")
    p.add_argument("--speed", type=float, default=1.0)
    p.add_argument("--bounces", type=int, default=None, help="defaults to n-sides")
    return parser


_COMMON = {"command", "n_sides", "radius", "hbar", "format", "output", "precision", "run_id"}


def parse_config(argv):
    ns = build_parser().parse_args(argv)
    values = vars(ns)
    options = {k: v for k, v in values.items() if k not in _COMMON}
    return RunConfig(
        command=ns.command,
        n_sides=ns.n_sides,
        radius=ns.radius,
        hbar=ns.hbar,
        format=ns.format,
        output=ns.output,
        precision=ns.precision,
        run_id=ns.run_id,
        options=options,
    )


# -- commands --------------------------------------------------------------


def _spectrum(cfg):
    opts = cfg.options
    spec = cfg.spec
    if opts["levels"] < 1:
        raise ValueError("--levels must be >= 1")
    ns = range(opts["n_min"], opts["n_min"] + opts["levels"])
    columns = ["n", "k", "energy", "degeneracy"]
    rows = []
    if spec.degenerate_parametrization:
        if opts["extension"]:
            raise ValueError("--extension perimeter needs n-sides >= 3")
        for n in ns:
            lvl = spectrum.well_level(n, spec)
            rows.append([n, n * math.pi / (2.0 * spec.circumradius), lvl.energy, 1])
        return columns, rows, {"mode": "well"}
    if opts["extension"]:
        columns += ["perimeter_j", "perimeter_energy"]
    for n in ns:
        lvl = spectrum.energy_level(n, spec)
        row = [lvl.n, lvl.k, lvl.energy, lvl.degeneracy]
        if opts["extension"]:
            ext = spectrum.perimeter_spectrum(n * spec.n_sides, spec)
            row += [ext.n, ext.energy]
        rows.append(row)
    return columns, rows, {"mode": "polygon"}


def _wavefunction(cfg):
    opts = cfg.options
    spec = cfg.spec
    wf = wavefunction.make_wavefunction(
        opts["n"], opts["form"], spec, opts["norm_convention"]
    )
    xi, m, q, s, psi = wavefunction.sample_arrays(wf, opts["samples"], spec)
    rows = [
        [float(xi[i]), int(m[i]), float(q[i]), float(s[i]), float(psi[i].real), float(psi[i].imag)]
        for i in range(xi.size)
    ]
    meta = {
        "N": spec.n_sides,
        "a": spec.circumradius,
        "hbar": spec.hbar,
        "n": wf.level.n,
        "form": wf.form.value,
        "norm_convention": wf.norm_convention.value,
        "norm_constant": wf.norm_constant,
    }
    return SAMPLE_COLUMNS, rows, meta


def _limits(cfg):
    opts = cfg.options
    columns = ["case", "n_sides", "n", "computed", "reference", "rel_deviation", "bound"]
    rows = []
    for big_n in opts["n_values"]:
        spec = PolygonSpec(big_n, cfg.radius, PhysicalConstants(hbar=cfg.hbar))
        for n in range(1, opts["levels"] + 1):
            lvl = spectrum.circle_limit_level(n, spec)
            rows.append(
                ["circle_l", big_n, n, lvl.l, n, lvl.l / n - 1.0, spectrum.circle_limit_bound(big_n)]
            )
    well = PolygonSpec(2, cfg.radius, PhysicalConstants(hbar=cfg.hbar))
    fd = oracle.solve_dirichlet_well(2.0 * cfg.radius, opts["grid"], cfg.hbar)
    for n in range(1, opts["levels"] + 1):
        exact = spectrum.well_level(n, well).energy
        halved = spectrum.well_level_from_polygon_formula(n, well)
        rows.append(["well_halved_k", 2, n, halved, exact, halved / exact - 1.0, 1e-15])
        rows.append(
            ["well_fd", 2, n, fd.level(n), exact, fd.level(n) / exact - 1.0, fd.level_error(n)]
        )
    return columns, rows, {"well_grid": opts["grid"]}


def _classical(cfg):
    opts = cfg.options
    model = classical.BounceModel(opts["speed"], cfg.spec)
    bounces = opts["bounces"] if opts["bounces"] is not None else cfg.n_sides
    trace = classical.trace_bounces(model, bounces)
    rows = np.hstack([trace.corners, trace.momenta]).tolist()
    force = classical.average_force(model)
    target = model.speed**2 / cfg.radius
    meta = {
        "speed": model.speed,
        "impulse_per_corner": classical.impulse_per_corner(model).magnitude,
        "average_force": force,
        "v2_over_a": target,
        "rel_error": abs(force / target - 1.0),
    }
    return TRACE_COLUMNS, rows, meta


# -- verify ----------------------------------------------------------------


def _check(rows, suite, name, measured, bound):
    rows.append([suite, name, float(measured), float(bound), bool(measured <= bound)])


def verify_rows(spec, grid, suites):
    """Run the oracle cross-checks; each row is (suite, check, measured, bound, passed)."""
    rows = []
    geom = derive_geometry(spec)
    needs_periodic = {"periodic", "laplace_beltrami"} & set(suites)
    periodic = oracle.solve_periodic_q(spec, grid) if needs_periodic else None

    if "periodic" in suites:
        for n in (1, 2, 3):
            exact = spectrum.energy_level(n, spec).energy
            _check(rows, "periodic", f"E_{n} rel err", abs(periodic.level(n) / exact - 1), periodic.level_error(n))
        _check(rows, "periodic", "null mode", abs(periodic.eigenvalues[0]), 1e-9 * max(1.0, spec.hbar**2))

    if "laplace_beltrami" in suites:
        lb = oracle.solve_laplace_beltrami_xi(spec, grid)
        for n in range(1, 7):
            gap = abs(lb.level(n) / periodic.level(n) - 1)
            _check(rows, "laplace_beltrami", f"level {n} gap", gap, lb.level_error(n) + periodic.level_error(n))

    if "well" in suites:
        well = PolygonSpec(2, spec.circumradius, spec.constants)
        fd = oracle.solve_dirichlet_well(2.0 * spec.circumradius, max(grid, 2000), spec.hbar)
        e1 = spectrum.well_level(1, well).energy
        _check(rows, "well", "E_1 rel err", abs(fd.level(1) / e1 - 1), 1e-6)
        _check(rows, "well", "E_2/E_1 - 4", abs(fd.level(2) / fd.level(1) - 4), 1e-5)

    if "roots" in suites:
        k1 = spectrum.quantized_k(1, spec)
        k_max = 3.5 * k1
        found = oracle.find_quantized_k(spec, k_max)
        expected = [spectrum.quantized_k(n, spec) for n in range(0, 4)]
        err = max(abs(a - b) for a, b in zip(found, expected)) if len(found) == len(expected) else math.inf
        _check(rows, "roots", "root set error", err, 1e-10 * max(1.0, k_max))

    if "continuity" in suites:
        worst = max(
            wavefunction.check_continuity(form, spectrum.quantized_k(n, spec), spec)
            for form in wavefunction.Form
            for n in range(0, 4)
        )
        _check(rows, "continuity", "max mismatch at quantized k", worst, 1e-12)
        k = 0.5 * spectrum.quantized_k(1, spec)
        dev = abs(wavefunction.check_continuity("plane_plus", k, spec) - 2 * abs(math.sin(k * geom.side_length / 2)))
        _check(rows, "continuity", "off-quantum mismatch vs 2|sin(kc/2)|", dev, 1e-12)

    if "normalization" in suites:
        worst = 0.0
        for form in wavefunction.Form:
            for n in range(0 if form is not wavefunction.Form.ANTISYMMETRIC else 1, 4):
                wf = wavefunction.make_wavefunction(n, form, spec)
                worst = max(worst, abs(wavefunction.norm_integral(wf, spec, 2048) - 1))
        _check(rows, "normalization", "max |norm - 1|", worst, 1e-9)

    if "convergence" in suites:
        exact = spectrum.energy_level(1, spec).energy
        grids = [grid // 4, grid // 2, grid]
        errs = [abs(oracle.solve_periodic_q(spec, m).level(1) - exact) for m in grids]
        for i in range(2):
            ratio = errs[i] / errs[i + 1]
            _check(rows, "convergence", f"ratio M={grids[i]}->{grids[i + 1]} (|r-4|)", abs(ratio - 4.0), 0.5)

    if "classical" in suites:
        model = classical.BounceModel(1.0, spec)
        target = model.speed**2 / spec.circumradius
        _check(rows, "classical", "average_force vs v^2/a", abs(classical.average_force(model) / target - 1), 1e-13)
    return rows


def _verify(cfg):
    opts = cfg.options
    if cfg.n_sides < 3:
        raise ValueError("verify needs n-sides >= 3")
    suites = VERIFY_SUITES if opts["suite"] == "all" else [opts["suite"]]
    rows = verify_rows(cfg.spec, opts["grid"], suites)
    failed = sum(1 for r in rows if not r[-1])
    return ["suite", "check", "measured", "bound", "passed"], rows, {"failed": failed}


COMMANDS = {
    "spectrum": _spectrum,
    "wavefunction": _wavefunction,
    "verify": _verify,
    "limits": _limits,
    "classical": _classical,
}


# -- output ----------------------------------------------------------------


def _fmt(value, precision):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.{precision}g}"
    return str(value)


def render(cfg, columns, rows, meta):
    if cfg.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_fmt(v, cfg.precision) for v in row])
        return buf.getvalue()
    metadata = {
        "command": cfg.command,
        "argv": cfg.to_argv(),
        "units": {"hbar": cfg.hbar, "mass": 1.0},
    }
    if cfg.run_id is not None:
        metadata["run_id"] = cfg.run_id
    metadata.update(meta)
    records = [dict(zip(columns, row)) for row in rows]
    return json.dumps({"metadata": metadata, "rows": records}, indent=2) + "\n"


def run(cfg, stdout=None):
    """Execute ``cfg``; returns ``(exit_status, text)`` and writes the output."""
    columns, rows, meta = COMMANDS[cfg.command](cfg)
    text = render(cfg, columns, rows, meta)
    if cfg.output == "-":
        (stdout or sys.stdout).write(text)
    else:
        with open(cfg.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    status = EXIT_OK
    if cfg.command == "verify" and meta["failed"]:
        status = EXIT_VERIFY_FAILED
    return status, text


def main(argv=None, stdout=None, stderr=None):
    stderr = stderr or sys.stderr
    try:
        cfg = parse_config(argv)
        if cfg.precision < 1:
            raise ValueError("--precision must be >= 1")
        status, _ = run(cfg, stdout)
    except (ValueError, TypeError, OSError) as exc:
        kind = "usage" if isinstance(exc, UsageError) else "validation"
        stderr.write(json.dumps({"error": kind, "message": str(exc)}) + "\n")
        return EXIT_INVALID
    if status == EXIT_VERIFY_FAILED:
        stderr.write(json.dumps({"error": "verification", "message": "one or more checks failed"}) + "\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
