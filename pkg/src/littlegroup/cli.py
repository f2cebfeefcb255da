"""Command-line front end: check suites and plot-ready data tables.

Subcommands
-----------
algebra-check   run every bracket identity and invariance check
contract        table of the boosted-generator family converging to its limit
squeeze-plot    sampled space-time and momentum-energy wave functions
fourier-check   numeric transform vs the closed form, plus the power identity
coherence       boost kinematics and the decoherence ratio for a beam

Every subcommand takes --format csv|json and --output PATH (default:
standard output) and is deterministic: identical flags produce
byte-identical files.  Exit codes: 0 success, 1 check failure, 2 bad
arguments.  CSV files carry one header row, snake_case columns, and
numbers with 12 significant digits; JSON output is one object with
"params", "results", and "residuals" keys.  All physics is in natural
units; GeV enters only through the coherence subcommand.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import lorentz_algebra as la
from . import momentum_space as ms
from . import oscillator as osc
from . import parton

COMMUTATOR_TOL = 1e-12
INVARIANCE_TOL = 1e-9
INTERVAL_TOL = 1e-10
FOURIER_MAX_ERROR_TOL = 1e-6
PARSEVAL_TOL = 1e-5

_CHECK_SEED = 20260808


def _fmt(x: float) -> str:
    s = f"{float(x):.12g}"
    return "0" if s == "-0" else s


def _round12(x: float) -> float:
    return float(_fmt(x))


def _jsonify(obj):
    if isinstance(obj, dict):
        return {k: _jsonify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonify(v) for v in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return _round12(obj)
    return obj


def _csv_cell(v) -> str:
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return _fmt(v)
    return str(v)


def _csv_text(header: list[str], rows: list[list]) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(_csv_cell(c) for c in row) for row in rows)
    return "\n".join(lines) + "\n"


def _json_text(params: dict, results, residuals: dict) -> str:
    doc = {"params": _jsonify(params), "results": _jsonify(results),
           "residuals": _jsonify(residuals)}
    return json.dumps(doc, indent=2) + "\n"


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# algebra-check
# ---------------------------------------------------------------------------

def _invariance_rows() -> list[tuple[str, float, float]]:
    thetas = np.linspace(-5.0, 5.0, 20)
    scales = (0.5, 1.0, 10.0)
    rows = []
    for label in ("J1", "J2", "J3"):
        worst = 0.0
        for theta in thetas:
            elem = la.group_element(label, float(theta))
            for m in scales:
                p = la.FourVector(0.0, 0.0, 0.0, m)
                moved = elem.matrix @ p.as_array() - p.as_array()
                worst = max(worst, float(np.abs(moved).max()))
        rows.append((f"exp(theta {label}) fixes rest momentum", worst,
                     INVARIANCE_TOL))
    for label in ("J3", "N1", "N2"):
        worst = 0.0
        for theta in thetas:
            elem = la.group_element(label, float(theta))
            for w in scales:
                p = la.FourVector(0.0, 0.0, w, w)
                moved = elem.matrix @ p.as_array() - p.as_array()
                worst = max(worst, float(np.abs(moved).max()))
        rows.append((f"exp(theta {label}) fixes lightlike momentum", worst,
                     INVARIANCE_TOL))
    rng = np.random.default_rng(_CHECK_SEED)
    worst_interval = 0.0
    worst_det = 0.0
    for _ in range(100):
        label = la.GENERATOR_LABELS[int(rng.integers(len(la.GENERATOR_LABELS)))]
        theta = float(rng.uniform(-2.0, 2.0))
        elem = la.group_element(label, theta)
        worst_det = max(worst_det, abs(float(np.linalg.det(elem.matrix)) - 1.0))
        p = rng.normal(size=4) * 3.0
        before = p[0]**2 + p[1]**2 + p[2]**2 - p[3]**2
        q = elem.matrix @ p
        after = q[0]**2 + q[1]**2 + q[2]**2 - q[3]**2
        worst_interval = max(worst_interval,
                             abs(after - before) / max(1.0, abs(before)))
    rows.append(("interval preserved (100 random vectors)", worst_interval,
                 INTERVAL_TOL))
    rows.append(("determinant = 1 (100 random elements)", worst_det,
                 INTERVAL_TOL))
    return rows


def cmd_algebra_check(args) -> int:
    gens = None
    if args.corrupt:
        mats = {k: np.array(v) for k, v in la.GENERATOR_MATRICES.items()}
        mats["J1"] = mats["J1"] + 1e-3
        gens = mats
    checks = [(name, residual, COMMUTATOR_TOL)
              for name, residual in la.relation_residuals(gens)]
    checks += [(name, residual, COMMUTATOR_TOL)
               for name, residual in la.planar_commutation_check()]
    checks += _invariance_rows()
    rows = [[name, residual, tol, residual <= tol]
            for name, residual, tol in checks]
    all_pass = all(row[3] for row in rows)
    if args.format == "json":
        results = [{"relation": n, "max_residual": r, "tolerance": t,
                    "passed": p} for n, r, t, p in rows]
        text = _json_text(
            {"subcommand": "algebra-check", "corrupt": bool(args.corrupt)},
            results,
            {"max_relation_residual": max(r[1] for r in rows)})
    else:
        text = _csv_text(["relation", "max_residual", "tolerance", "passed"],
                         rows)
    _emit(text, args.output)
    return 0 if all_pass else 1


# ---------------------------------------------------------------------------
# contract
# ---------------------------------------------------------------------------

def cmd_contract(args) -> int:
    if args.eta_max <= 0 or args.steps < 1:
        raise ValueError("contract needs eta-max > 0 and steps >= 1")
    etas = [args.eta_max * k / args.steps for k in range(args.steps + 1)]
    rows = []
    for eta in etas:
        residual = la.contraction_residual(eta, args.source)
        rows.append([eta, residual, residual * math.exp(2.0 * eta)])
    scaled_tail = [r[2] for r in rows if r[0] >= 4.0]
    spread = (max(scaled_tail) - min(scaled_tail)) if scaled_tail else 0.0
    if args.format == "json":
        results = [{"eta": e, "residual": r, "residual_scaled": s}
                   for e, r, s in rows]
        text = _json_text(
            {"subcommand": "contract", "eta_max": args.eta_max,
             "steps": args.steps, "source": args.source,
             "limit_coefficient": la.CONTRACTION_LIMIT_COEFFICIENT},
            results,
            {"scaled_column_spread_eta_ge_4": spread})
    else:
        text = _csv_text(["eta", "residual", "residual_scaled"], rows)
    _emit(text, args.output)
    return 0


# ---------------------------------------------------------------------------
# squeeze-plot
# ---------------------------------------------------------------------------

def _parse_grid(spec: str) -> tuple[tuple[float, float, int], ...]:
    triples = []
    for part in spec.split(","):
        bits = part.split(":")
        if len(bits) != 3:
            raise argparse.ArgumentTypeError(
                "grid must look like ZMIN:ZMAX:NZ[,TMIN:TMAX:NT]")
        try:
            triples.append((float(bits[0]), float(bits[1]), int(bits[2])))
        except ValueError as exc:
            raise argparse.ArgumentTypeError(f"bad grid component: {exc}")
    if len(triples) == 1:
        triples.append(triples[0])
    if len(triples) != 2:
        raise argparse.ArgumentTypeError("grid takes at most two axis triples")
    return tuple(triples)


def cmd_squeeze_plot(args) -> int:
    state = osc.OscillatorState(args.n, args.eta)
    if args.grid is None:
        space_grid = osc.GridSpec.for_rapidity(args.eta, 65)
    else:
        (zmin, zmax, nz), (tmin, tmax, nt) = args.grid
        space_grid = osc.GridSpec(zmin, zmax, tmin, tmax, nz, nt)
    half = osc.TAIL_HALF_WIDTH_FACTOR * math.exp(abs(args.eta))
    momentum_grid = osc.GridSpec(-half, half, -half, half,
                                 space_grid.n_z, space_grid.n_t)
    field = osc.sample_wavefunction(state, space_grid)
    # the transform integrates over its own quadrature grid, sized to
    # resolve the squeezed ridge regardless of the plot resolution
    n_quad = 512 if abs(args.eta) <= 1 else (1024 if abs(args.eta) <= 2 else 2048)
    quad_field = osc.sample_wavefunction(state, osc.GridSpec.for_rapidity(
        args.eta, n_quad))
    mom = ms.fourier_numeric(quad_field, momentum_grid)
    semi_u = math.exp(args.eta)
    semi_v = math.exp(-args.eta)
    if args.format == "json":
        results = {
            "space_time": {
                "z": list(space_grid.z_axis),
                "t": list(space_grid.t_axis),
                "values": [list(row) for row in field.values],
            },
            "momentum_energy": {
                "q_z": list(momentum_grid.z_axis),
                "q_0": list(momentum_grid.t_axis),
                "abs_values": [list(row) for row in np.abs(mom.values)],
            },
            "ellipse_semi_axes": {"u": semi_u, "v": semi_v},
        }
        text = _json_text(
            {"subcommand": "squeeze-plot", "n": args.n, "eta": args.eta,
             "tail_ok": field.tail_ok},
            results, {})
    else:
        rows = []
        zs = space_grid.z_axis
        ts = space_grid.t_axis
        for i, z in enumerate(zs):
            for j, t in enumerate(ts):
                rows.append(["space_time", z, t, field.values[i, j],
                             semi_u, semi_v])
        qzs = momentum_grid.z_axis
        q0s = momentum_grid.t_axis
        absmom = np.abs(mom.values)
        for i, qz in enumerate(qzs):
            for j, q0 in enumerate(q0s):
                rows.append(["momentum_energy", qz, q0, absmom[i, j],
                             semi_u, semi_v])
        text = _csv_text(
            ["representation", "x", "y", "value", "u_semi_axis", "v_semi_axis"],
            rows)
    _emit(text, args.output)
    return 0


# ---------------------------------------------------------------------------
# fourier-check
# ---------------------------------------------------------------------------

def cmd_fourier_check(args) -> int:
    state = osc.OscillatorState(0, args.eta)
    space_grid = osc.GridSpec.for_rapidity(args.eta, 512)
    momentum_grid = osc.GridSpec.for_rapidity(args.eta, 257)
    field = osc.sample_wavefunction(state, space_grid)
    mom = ms.fourier_numeric(field, momentum_grid)
    analytic = ms.sample_momentum_wavefunction(args.eta, momentum_grid)
    central = ms.central_region_mask(momentum_grid, args.eta)
    max_err = float(np.abs(np.abs(mom.values) - analytic.values)[central].max())
    power_space = osc.power_integral(field)
    power_momentum = osc.power_integral(mom)
    parseval_diff = abs(power_momentum - power_space)
    passed = max_err <= FOURIER_MAX_ERROR_TOL and parseval_diff <= PARSEVAL_TOL
    results = {
        "eta": args.eta,
        "max_abs_error_central": max_err,
        "max_abs_error_tolerance": FOURIER_MAX_ERROR_TOL,
        "parseval_space": power_space,
        "parseval_momentum": power_momentum,
        "parseval_abs_diff": parseval_diff,
        "parseval_tolerance": PARSEVAL_TOL,
        "passed": passed,
    }
    if args.format == "json":
        text = _json_text(
            {"subcommand": "fourier-check", "eta": args.eta,
             "space_points": space_grid.n_z,
             "momentum_points": momentum_grid.n_z},
            results,
            {"max_abs_error_central": max_err,
             "parseval_abs_diff": parseval_diff})
    else:
        header = list(results.keys())
        text = _csv_text(header, [[results[k] for k in header]])
    _emit(text, args.output)
    return 0 if passed else 1


# ---------------------------------------------------------------------------
# coherence
# ---------------------------------------------------------------------------

def cmd_coherence(args) -> int:
    beam = parton.BeamSpec(args.energy, args.mass)
    eta = parton.rapidity_from_beam(beam)
    record = {
        "eta": eta,
        "period_dilation": parton.period_dilation(eta),
        "interaction_time_contraction": parton.interaction_time_contraction(eta),
        "coherence_ratio": parton.coherence_ratio(eta),
        "marginal_variance": osc.marginal_variance(eta),
    }
    if args.format == "json":
        text = _json_text(
            {"subcommand": "coherence", "energy_gev": args.energy,
             "mass_gev": args.mass},
            record, {})
    else:
        header = list(record.keys())
        text = _csv_text(header, [[record[k] for k in header]])
    _emit(text, args.output)
    return 0


# ---------------------------------------------------------------------------
# parser / entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="littlegroup",
        description="Little-group algebra checks and squeezed-oscillator data tables")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv",
                        help="output format (default: csv)")
    common.add_argument("--output", metavar="PATH", default=None,
                        help="write to PATH instead of standard output")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("algebra-check", parents=[common],
                       help="run all bracket identities and invariance checks")
    p.add_argument("--corrupt", action="store_true",
                   help="negative control: perturb a generator so the suite fails")
    p.set_defaults(func=cmd_algebra_check)

    p = sub.add_parser("contract", parents=[common],
                       help="boosted-generator family and its convergence rate")
    p.add_argument("--eta-max", type=float, default=10.0, metavar="F",
                   help="largest rapidity in the table (default: 10)")
    p.add_argument("--steps", type=int, default=10, metavar="N",
                   help="number of rapidity intervals (default: 10)")
    p.add_argument("--source", choices=("J2", "J1"), default="J2",
                   help="transverse generator to contract (default: J2)")
    p.set_defaults(func=cmd_contract)

    p = sub.add_parser("squeeze-plot", parents=[common],
                       help="sampled wave functions in both representations")
    p.add_argument("--n", type=int, default=0, metavar="N",
                   help="excitation number (default: 0)")
    p.add_argument("--eta", type=float, default=1.0, metavar="F",
                   help="boost rapidity (default: 1)")
    p.add_argument("--grid", type=_parse_grid, default=None,
                   metavar="ZMIN:ZMAX:NZ[,TMIN:TMAX:NT]",
                   help="space-time window (default: +-6 exp(|eta|), 65 points); "
                        "write --grid=-8:8:64 when the first bound is negative")
    p.set_defaults(func=cmd_squeeze_plot)

    p = sub.add_parser("fourier-check", parents=[common],
                       help="numeric transform vs closed form, plus Parseval")
    p.add_argument("--eta", type=float, default=1.0, metavar="F",
                   help="boost rapidity (default: 1)")
    p.set_defaults(func=cmd_fourier_check)

    p = sub.add_parser("coherence", parents=[common],
                       help="rapidity, dilation factors, and decoherence ratio")
    p.add_argument("--energy", type=float, required=True, metavar="F",
                   help="beam energy in GeV")
    p.add_argument("--mass", type=float,
                   default=parton.DEFAULT_PROTON_MASS_GEV, metavar="F",
                   help="particle mass in GeV (default: 0.938, proton)")
    p.set_defaults(func=cmd_coherence)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
