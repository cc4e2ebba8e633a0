"""``lubridrag`` command-line interface.

Exit status is 0 on success, 2 on a usage error (bad flag, parameter outside
a model's domain) and 1 on a numerical failure, in which case a JSON error
document ``{"error": {"kind": ..., "message": ...}}`` is printed on stdout.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .corrugated import CorrugationData, drag_bounds, shifted_wall_drag
from .dynamics import simulate
from .estimators import make_estimator
from .exceptions import DomainError, NumericalError
from .geometry import DEFAULT_R0
from .noslip import AlphaConstants, asym_drag
from .oracle1d import ProfileProblem, compare_to_closed_form
from .quad import QuadConfig
from .slip import SlipParams, hocking_asym

COMMANDS = ("drag", "asym", "sweep", "oracle", "simulate", "constants")
MODELS = ("noslip", "slip", "corrugated")

# model -> (allowed parameters, required parameters)
MODEL_PARAMS = {
    "noslip": (("eps", "alpha", "r0"), ()),
    "slip": (("beta_s", "beta_p", "eps", "alpha", "r0"), ("beta_s", "beta_p")),
    "corrugated": (("eps", "lambda", "beta_eff"), ("eps", "lambda", "beta_eff")),
}
DEFAULTS = {"eps": 0.0, "alpha": 0.0, "r0": DEFAULT_R0}
GRID_NAMES = ("h", "eps", "alpha", "beta_s", "beta_p", "lambda", "beta_eff")
CONSTANTS_TABLE = tuple(round(0.1 * k, 1) for k in range(10))


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{message}\n{self.format_usage().rstrip()}")


def _float(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"not a finite number: {text!r}")
    return value


def _grid(text):
    """Parse ``name=start:stop:count[:log]``."""
    try:
        name, spec = text.split("=", 1)
        parts = spec.split(":")
        if len(parts) not in (3, 4) or (len(parts) == 4 and parts[3] != "log"):
            raise ValueError
        start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"bad grid {text!r}; expected name=start:stop:count[:log]") from None
    name = name.replace("-", "_")
    if name not in GRID_NAMES:
        raise argparse.ArgumentTypeError(f"unknown grid parameter {name!r}")
    if count < 1:
        raise argparse.ArgumentTypeError("grid count must be >= 1")
    if len(parts) == 4:
        if start <= 0 or stop <= 0:
            raise argparse.ArgumentTypeError("log grids need positive end points")
        values = np.geomspace(start, stop, count)
    else:
        values = np.linspace(start, stop, count)
    return name, [float(v) for v in values]


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="lubridrag", description="Lubrication drag near a wall.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--model", choices=MODELS, default="noslip")
    p.add_argument("--h", type=_float)
    p.add_argument("--eps", type=_float)
    p.add_argument("--alpha", type=_float)
    p.add_argument("--beta-s", dest="beta_s", type=_float)
    p.add_argument("--beta-p", dest="beta_p", type=_float)
    p.add_argument("--lambda", dest="lambda_", type=_float)
    p.add_argument("--beta-eff", dest="beta_eff", type=_float)
    p.add_argument("--r0", type=_float)
    p.add_argument("--tol", type=_float, default=1e-10)
    p.add_argument("--grid", type=_grid, action="append", default=[])
    p.add_argument("--n", type=int, default=200)
    p.add_argument("--alpha-s", dest="alpha_s", type=_float,
                   help="oracle: Robin weight at the solid (default: clamped problem)")
    p.add_argument("--alpha-p", dest="alpha_p", type=_float,
                   help="oracle: Robin weight at the wall")
    p.add_argument("--h0", type=_float)
    p.add_argument("--v0", type=_float)
    p.add_argument("--t-max", dest="t_max", type=_float, default=math.inf)
    p.add_argument("--format", choices=("csv", "json"), default="json")
    p.add_argument("--output")
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    return p


def _model_params(args, grid_names=()):
    """Collect the model parameters given on the command line, checking applicability."""
    allowed, required = MODEL_PARAMS[args.model]
    given = {}
    for name in ("eps", "alpha", "r0", "beta_s", "beta_p", "lambda", "beta_eff"):
        value = getattr(args, "lambda_" if name == "lambda" else name)
        if value is None:
            continue
        if name not in allowed:
            raise UsageError(f"--{name.replace('_', '-')} does not apply to model {args.model!r}")
        given[name] = value
    for name in grid_names:
        if name != "h" and name not in allowed:
            raise UsageError(f"grid parameter {name!r} does not apply to model {args.model!r}")
    missing = [n for n in required if n not in given and n not in grid_names]
    if missing:
        raise UsageError(f"model {args.model!r} needs " + ", ".join(f"--{m.replace('_', '-')}" for m in missing))
    for name in allowed:
        if name not in given and name in DEFAULTS:
            given[name] = DEFAULTS[name]
    return given


def _estimator(model, params, tol):
    if model == "corrugated":
        beta = params["beta_eff"]
        return make_estimator("corrugated", eps=params["eps"], depth=params["lambda"],
                              beta_x=beta, beta_y=beta, tol=tol)
    return make_estimator(model, tol=tol, **params)


def _check_h(h):
    if h is None:
        raise UsageError("--h is required")
    if h <= 0:
        raise UsageError(f"--h must be > 0, got {h}")
    return h


def _corrugated_record(h, params):
    if params["beta_eff"] < 0:
        raise DomainError("beta_eff must be >= 0")
    lower, upper = drag_bounds(h, CorrugationData(params["eps"], params["lambda"]))
    rec = shifted_wall_drag(h, params["eps"], params["beta_eff"]).to_dict()
    rec["lower_bound"] = lower.value
    rec["upper_bound"] = upper.value
    return rec


def _asym_estimate(model, h, params):
    if model == "noslip":
        return asym_drag(h, params["eps"], params["alpha"])
    if model == "slip":
        return hocking_asym(h, SlipParams(params["beta_s"], params["beta_p"]))
    return shifted_wall_drag(h, params["eps"], params["beta_eff"])


def cmd_drag(args, asymptotic=False):
    h = _check_h(args.h)
    params = _model_params(args)
    if args.model == "corrugated":
        result = _corrugated_record(h, params)
    elif asymptotic:
        result = _asym_estimate(args.model, h, params).to_dict()
    else:
        result = _estimator(args.model, params, args.tol).estimate(h).to_dict()
    return {"command": args.command, "model": args.model, "h": h, **params, **result}


SWEEP_RESULTS = {
    "noslip": ("exact", "asymptotic", "beta", "branch"),
    "slip": ("exact", "hocking", "ratio"),
    "corrugated": ("lower", "shifted", "upper"),
}


def _sweep_point(model, params, h, tol):
    if model == "corrugated":
        rec = _corrugated_record(h, params)
        return [rec["lower_bound"], rec["value"], rec["upper_bound"]]
    exact = _estimator(model, params, tol).estimate(h).value
    asym = _asym_estimate(model, h, params)
    if model == "noslip":
        return [exact, asym.value, asym.regime, asym.branch]
    return [exact, asym.value, asym.regime]


def cmd_sweep(args):
    if not args.grid:
        raise UsageError("sweep needs at least one --grid")
    names = [name for name, _ in args.grid]
    if len(set(names)) != len(names):
        raise UsageError("each grid parameter may be given once")
    params = _model_params(args, grid_names=names)
    if "h" not in names:
        params["h"] = _check_h(args.h)
    columns = ["h"] + list(MODEL_PARAMS[args.model][0])
    points = []
    for combo in itertools.product(*(values for _, values in args.grid)):
        point = dict(params)
        point.update(zip(names, combo))
        _check_h(point["h"])
        _validate_point(args.model, point, args.tol)
        points.append(point)
    if args.threads < 1:
        raise UsageError("--threads must be >= 1")

    def run(point):
        p = {k: v for k, v in point.items() if k != "h"}
        return [point.get(c) for c in columns] + _sweep_point(args.model, p, point["h"], args.tol)

    with ThreadPoolExecutor(max_workers=args.threads) as pool:
        rows = list(pool.map(run, points))
    return {"command": "sweep", "model": args.model,
            "columns": columns + list(SWEEP_RESULTS[args.model]), "rows": rows}


def _validate_point(model, point, tol):
    params = {k: v for k, v in point.items() if k != "h"}
    if model == "corrugated":
        CorrugationData(params["eps"], params["lambda"])
        if params["beta_eff"] < 0:
            raise DomainError("beta_eff must be >= 0")
    else:
        _estimator(model, params, tol)


def cmd_oracle(args):
    if args.alpha_s is None and args.alpha_p is None:
        problem = ProfileProblem.clamped(args.n)
    elif args.alpha_s is None or args.alpha_p is None:
        raise UsageError("--alpha-s and --alpha-p go together")
    else:
        problem = ProfileProblem.robin(args.alpha_s, args.alpha_p, args.n)
    report = compare_to_closed_form(problem)
    out = {"command": "oracle", "bc": problem.bc, "n": problem.n}
    if problem.bc == "robin":
        out.update(alpha_s=problem.alpha_s, alpha_p=problem.alpha_p)
    out.update(energy=report.oracle.energy, continuum_energy=report.continuum_energy,
               continuum_gap=report.continuum_gap, max_abs_gap=report.max_abs_gap,
               energy_gap=report.energy_gap)
    return out


def cmd_simulate(args):
    if args.h0 is None or args.v0 is None:
        raise UsageError("simulate needs --h0 and --v0")
    if args.h0 <= 0:
        raise UsageError(f"--h0 must be > 0, got {args.h0}")
    params = _model_params(args)
    drag = _estimator(args.model, params, args.tol)
    ode_tol = max(args.tol, 1e-12)
    traj = simulate(drag, args.h0, args.v0, t_max=args.t_max, tol=ode_tol)
    outcome = {"kind": traj.outcome.kind}
    for key in ("t", "h_star", "t_max"):
        if hasattr(traj.outcome, key):
            outcome[key] = getattr(traj.outcome, key)
    return {"command": "simulate", "model": args.model, "h0": args.h0, "v0": args.v0,
            "outcome": outcome,
            "samples": {"t": traj.t.tolist(), "h": traj.h.tolist(), "v": traj.v.tolist()}}, traj


def _constants_row(alpha, tol):
    c = AlphaConstants.compute(alpha, QuadConfig(abs_tol=tol, rel_tol=tol))
    return {"alpha": c.alpha, "lambda_alpha": c.lambda_alpha, "mu_alpha": c.mu_alpha,
            "log_case": c.mu_alpha is None}


def cmd_constants(args):
    if args.alpha is not None:
        return {"command": "constants", **_constants_row(args.alpha, args.tol)}
    return {"command": "constants", "rows": [_constants_row(a, args.tol) for a in CONSTANTS_TABLE]}


def _cell(value):
    if isinstance(value, float):
        return format(value, ".17g")
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _write_csv(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(v) for v in row])
    return buf.getvalue()


def render(doc, fmt, trajectory=None) -> str:
    if fmt == "json":
        return json.dumps(doc, allow_nan=False) + "\n"
    if trajectory is not None:
        return trajectory.to_csv()
    if doc["command"] == "sweep":
        return _write_csv(doc["columns"], doc["rows"])
    rows = doc.get("rows")
    if rows is not None:
        header = list(rows[0])
        return _write_csv(header, [[r[k] for k in header] for r in rows])
    flat = {k: v for k, v in doc.items() if not isinstance(v, dict)}
    return _write_csv(list(flat), [list(flat.values())])


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        stderr.write(f"lubridrag: error: {exc}\n")
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    trajectory = None
    try:
        if args.command in ("drag", "asym"):
            doc = cmd_drag(args, asymptotic=args.command == "asym")
        elif args.command == "sweep":
            doc = cmd_sweep(args)
        elif args.command == "oracle":
            doc = cmd_oracle(args)
        elif args.command == "simulate":
            doc, trajectory = cmd_simulate(args)
        else:
            doc = cmd_constants(args)
    except (UsageError, DomainError) as exc:
        stderr.write(f"lubridrag: error: {exc}\n")
        return 2
    except NumericalError as exc:
        stdout.write(json.dumps({"error": {"kind": exc.kind, "message": str(exc)}}) + "\n")
        return 1
    text = render(doc, args.format, trajectory)
    if args.output:
        with open(args.output, "w", newline="") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return 0


def main():
    sys.exit(run())
