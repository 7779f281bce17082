"""Command-line front end: level tables, figure data, verification suites,
and closed-form vs numeric solves.

Exit codes: 0 success, 1 verification or convergence failure, 2 invalid
input.  Output is deterministic: identical flags (and seed) give
byte-identical output.  All numbers carry 9 significant digits.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import config
from .contour import ContourGrid, default_angle, self_consistent_energy
from .errors import CxCoulombError, LostTracking, NotConverged
from .qnum import Couplings, Model, channel_with_l, effective_params, make_channel, make_state
from .spectra import Regime, energy_general, figure1_data, figure2_data
from .suites import run_suites

LEVEL_COLUMNS = (
    "model", "n", "two_j", "omega_tilde", "a1", "a2",
    "branch", "e_over_m", "valid", "regime", "quantization_residual",
)
SOLVE_COLUMNS = (
    "closed_form_e_over_m", "numeric_e_over_m", "abs_diff",
    "outer_iterations", "grid_error_estimate",
)


def fmt(x) -> str:
    """9 significant digits; empty cell for NaN (figure gaps)."""
    if isinstance(x, float):
        if math.isnan(x):
            return ""
        return f"{x:.9g}"
    return str(x)


def jnum(x: float):
    return None if (isinstance(x, float) and math.isnan(x)) else float(f"{x:.9g}")


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _add_channel_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--model", choices=["dirac", "kg"], default="dirac")
    p.add_argument("--two-j", type=int, help="doubled total angular momentum (odd)")
    p.add_argument("--omega", type=int, choices=[-1, 1], help="sign distinguishing l = j -+ 1/2")
    p.add_argument("--l", type=int, help="orbital quantum number (spin-0 model)")
    p.add_argument("--n", type=int, required=True, help="principal quantum number")
    p.add_argument("--a1", type=float, default=0.0, help="imaginary vector coupling strength")
    p.add_argument("--a2", type=float, default=0.0, help="imaginary scalar coupling strength")
    p.add_argument("--z-alpha", type=float, help="alias: sets --a1 and forces --a2 0")
    p.add_argument("--mass", type=float, default=1.0)


def _resolve_problem(args):
    """(model, channel, state, couplings) from parsed flags; raises ValueError."""
    model = Model.DIRAC if args.model == "dirac" else Model.KLEIN_GORDON
    a1, a2 = args.a1, args.a2
    if args.z_alpha is not None:
        a1, a2 = args.z_alpha, 0.0
    if model is Model.KLEIN_GORDON:
        if args.l is None:
            raise ValueError("--l is required for the spin-0 model")
        channel = channel_with_l(args.l)
    else:
        if args.two_j is None or args.omega is None:
            raise ValueError("--two-j and --omega are required for the spin-1/2 model")
        channel = make_channel(args.two_j, args.omega)
    state = make_state(args.n, channel)
    return model, channel, state, Couplings(a1=a1, a2=a2, m=args.mass)


def _level_rows(model, channel, state, couplings):
    levels, report = energy_general(model, channel, state, couplings)
    rows = []
    for lev in sorted(levels, key=lambda l: (state.n, l.branch.value)):
        rows.append({
            "model": model.value,
            "n": state.n,
            "two_j": channel.two_j,
            "omega_tilde": channel.omega_tilde,
            "a1": couplings.a1,
            "a2": couplings.a2,
            "branch": lev.branch.value,
            "e_over_m": lev.ratio,
            "valid": lev.valid,
            "regime": report.regime.value,
            "quantization_residual": lev.quantization_residual,
        })
    return rows, report


def _emit_table(columns, rows, diagnostics, cfg, args) -> None:
    if args.format == "json":
        payload = {
            "config": cfg,
            "rows": [
                {k: (jnum(v) if isinstance(v, float) else v) for k, v in row.items()}
                for row in rows
            ],
            "diagnostics": diagnostics,
        }
        _write(json.dumps(payload, indent=2) + "\n", args.output)
    else:
        lines = [f"# {k}={v}" for k, v in diagnostics.items() if v not in ("", None)]
        lines.append(",".join(columns))
        for row in rows:
            lines.append(",".join(fmt(row[c]) for c in columns))
        _write("\n".join(lines) + "\n", args.output)


def cmd_levels(args) -> int:
    try:
        model, channel, state, couplings = _resolve_problem(args)
    except (ValueError, CxCoulombError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    rows, report = _level_rows(model, channel, state, couplings)
    cfg = {
        "command": "levels", "model": model.value, "n": state.n,
        "two_j": channel.two_j, "omega_tilde": channel.omega_tilde,
        "a1": couplings.a1, "a2": couplings.a2, "mass": couplings.m,
    }
    diagnostics = {"regime": report.regime.value, "detail": report.detail}
    _emit_table(LEVEL_COLUMNS, rows, diagnostics, cfg, args)
    return 0


def cmd_figure(args) -> int:
    if args.grid_steps is not None and args.grid_steps < 2:
        print("error: --grid-steps must be >= 2", file=sys.stderr)
        return 2
    lo, hi, steps = {
        1: config.FIGURE1_GRID, 2: config.FIGURE2_GRID,
    }[args.which]
    lo = args.grid_min if args.grid_min is not None else lo
    hi = args.grid_max if args.grid_max is not None else hi
    steps = args.grid_steps if args.grid_steps is not None else steps
    if hi <= lo:
        print("error: --grid-max must exceed --grid-min", file=sys.stderr)
        return 2
    grid = [lo + k * (hi - lo) / (steps - 1) for k in range(steps)]
    if args.which == 1:
        series = figure1_data(z_alpha_grid=grid)
        abscissa_name = "z_alpha"
    else:
        series = figure2_data(a_grid=grid)
        abscissa_name = "A"
    lines = [f"# figure={args.which}", "# generated-by=cxcoulomb"]
    lines.append(",".join([abscissa_name] + [s.label for s in series]))
    for i, x in enumerate(grid):
        cells = [fmt(float(x))] + [fmt(s.ordinate[i]) for s in series]
        lines.append(",".join(cells))
    try:
        _write("\n".join(lines) + "\n", args.output)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def cmd_verify(args) -> int:
    names = ["algebra", "residual", "closure", "eig"] if args.suite == "all" else [args.suite]
    checks = run_suites(names, seed=args.seed, draws=args.draws)
    all_pass = True
    for check in checks:
        status = "PASS" if check.passed else "FAIL"
        all_pass &= check.passed
        print(f"{status}  {check.name}: measured={check.measured:.3e} bound={check.bound:.3e}")
    print("all checks passed" if all_pass else "some checks FAILED")
    return 0 if all_pass else 1


def cmd_solve(args) -> int:
    try:
        model, channel, state, couplings = _resolve_problem(args)
    except (ValueError, CxCoulombError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    levels, report = energy_general(model, channel, state, couplings)
    if report.regime is Regime.BROKEN:
        critical = math.sqrt(channel.K ** 2 + couplings.a1 ** 2)
        print(
            f"error: broken regime ({report.detail}); real levels require "
            f"a2 < sqrt(K^2 + a1^2) = {fmt(critical)}",
            file=sys.stderr,
        )
        return 2
    if report.regime is not Regime.REGULAR:
        print(f"error: regime {report.regime.value}: {report.detail}", file=sys.stderr)
        return 2
    wanted = [l for l in levels if l.valid and l.branch.value == args.branch]
    if not wanted:
        print(f"error: no valid level on branch '{args.branch}'", file=sys.stderr)
        return 2
    closed = wanted[0].ratio
    eff = effective_params(model, channel, state, couplings)
    b0 = couplings.m * couplings.a2 + couplings.a1 * closed * couplings.m
    q_mag = abs(b0) / eff.n_eff
    grid = ContourGrid(
        n_points=args.n_points,
        rho_max=args.rho_max_factor * eff.n_eff / q_mag,
        angle=default_angle(b0),
    )
    try:
        result = self_consistent_energy(
            model, channel, state, couplings, grid=grid,
            initial_guess=closed * couplings.m,
        )
    except (NotConverged, LostTracking) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    diff = abs(result.energy_ratio - closed)
    row = {
        "closed_form_e_over_m": closed,
        "numeric_e_over_m": result.energy_ratio,
        "abs_diff": diff,
        "outer_iterations": result.outer_iterations,
        "grid_error_estimate": result.grid_error_estimate,
    }
    cfg = {
        "command": "solve", "model": model.value, "n": state.n,
        "a1": couplings.a1, "a2": couplings.a2, "mass": couplings.m,
        "branch": args.branch, "n_points": args.n_points,
    }
    diagnostics = {"regime": report.regime.value, "lam_imag": jnum(result.lam.imag)}
    _emit_table(SOLVE_COLUMNS, [row], diagnostics, cfg, args)
    return 0 if diff <= max(1e-4, result.grid_error_estimate) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cxcoulomb",
        description="Bound levels of spin-1/2 and spin-0 particles in imaginary Coulombic fields",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("levels", help="closed-form level table for one state")
    _add_channel_flags(p)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--output", help="output path (default: stdout)")
    p.set_defaults(func=cmd_levels)

    p = sub.add_parser("figure", help="figure data sweep as CSV")
    p.add_argument("which", type=int, choices=[1, 2])
    p.add_argument("--grid-min", type=float)
    p.add_argument("--grid-max", type=float)
    p.add_argument("--grid-steps", type=int)
    p.add_argument("--output", help="output path (default: stdout)")
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=["algebra", "residual", "closure", "eig", "all"])
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--draws", type=int, default=10000)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("solve", help="numeric contour solve vs closed form")
    _add_channel_flags(p)
    p.add_argument("--branch", choices=["+", "-"], default="+")
    p.add_argument("--n-points", type=int, default=config.CONTOUR_N_POINTS)
    p.add_argument("--rho-max-factor", type=float, default=config.CONTOUR_RHO_MAX_FACTOR)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--output", help="output path (default: stdout)")
    p.set_defaults(func=cmd_solve)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
