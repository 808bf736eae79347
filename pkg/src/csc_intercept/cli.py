"""Command-line batch front end.

    csc-intercept --scenario case.yaml --out out/

Writes solution.json, trajectory.csv (and trajectory_canonical.csv with
--emit-canonical) plus path.png / control.png unless --no-plots.  A
directory passed to --scenario is processed file by file on worker threads,
each scenario into its own subdirectory of --out.

Exit status: 0 success, 1 input error, 2 no feasible CSC path.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional

import yaml

from . import __version__
from .config import PROFILES, Tolerances
from .engagement import EngagementSpec
from .errors import InvalidSpec, NoFeasiblePath
from .planner import Plan, plan

EXIT_OK, EXIT_INPUT, EXIT_INFEASIBLE = 0, 1, 2
SCENARIO_SUFFIXES = (".json", ".yaml", ".yml")
CSV_COLUMNS = ("t", "x_world", "y_world", "heading", "u", "x_target", "y_target")
IMPACT_MODES = ("impact_angle", "final_heading")


class ScenarioError(InvalidSpec):
    """Scenario file is missing a key or has a malformed value."""


@dataclasses.dataclass(frozen=True)
class Scenario:
    spec: EngagementSpec
    tolerances: Optional[Tolerances] = None
    dt: Optional[float] = None


def _get(doc, key: str, where: str):
    if not isinstance(doc, dict):
        raise ScenarioError(f"{where or 'document'} must be a mapping")
    if key not in doc:
        raise ScenarioError(f"missing key '{where + '.' if where else ''}{key}'")
    return doc[key]


def _number(value, name: str) -> float:
    if isinstance(value, bool):
        raise ScenarioError(f"'{name}' must be a number, got {value!r}")
    try:
        out = float(value)
    except (TypeError, ValueError):
        raise ScenarioError(f"'{name}' must be a number, got {value!r}") from None
    if not math.isfinite(out):
        raise ScenarioError(f"'{name}' must be finite, got {value!r}")
    return out


def _pair(value, name: str):
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise ScenarioError(f"'{name}' must be a list [x, y], got {value!r}")
    return (_number(value[0], name), _number(value[1], name))


def parse_scenario(doc) -> Scenario:
    """Validate a decoded scenario document and build the engagement."""
    pursuer = _get(doc, "pursuer", "")
    target = _get(doc, "target", "")
    impact = _get(doc, "impact", "")
    mode = _get(impact, "mode", "impact")
    if mode not in IMPACT_MODES:
        raise ScenarioError(f"'impact.mode' must be one of {IMPACT_MODES}, got {mode!r}")
    value = _number(_get(impact, "value_rad", "impact"), "impact.value_rad")
    drift = doc.get("drift")
    spec = EngagementSpec(
        pursuer_position=_pair(_get(pursuer, "position", "pursuer"), "pursuer.position"),
        pursuer_heading=_number(_get(pursuer, "heading_rad", "pursuer"), "pursuer.heading_rad"),
        pursuer_speed=_number(_get(pursuer, "speed", "pursuer"), "pursuer.speed"),
        turn_radius=_number(_get(pursuer, "turn_radius", "pursuer"), "pursuer.turn_radius"),
        target_position0=_pair(_get(target, "position0", "target"), "target.position0"),
        target_velocity=_pair(_get(target, "velocity", "target"), "target.velocity"),
        drift=(0.0, 0.0) if drift is None else _pair(drift, "drift"),
        **{mode: value},
    )

    solver = doc.get("solver") or {}
    if not isinstance(solver, dict):
        raise ScenarioError("'solver' must be a mapping")
    tol = None
    overrides = solver.get("tolerances")
    if isinstance(overrides, str):
        if overrides not in PROFILES:
            raise ScenarioError(f"unknown tolerance profile {overrides!r}")
        tol = PROFILES[overrides]
    elif overrides:
        if not isinstance(overrides, dict):
            raise ScenarioError("'solver.tolerances' must be a mapping or a profile name")
        known = {f.name for f in dataclasses.fields(Tolerances)}
        bad = sorted(set(overrides) - known)
        if bad:
            raise ScenarioError(f"unknown key 'solver.tolerances.{bad[0]}'")
        base = PROFILES["default"]
        tol = dataclasses.replace(
            base,
            **{
                k: (int(_number(v, k)) if k == "bisection_max_iter" else _number(v, k))
                for k, v in overrides.items()
            },
        )
    dt = solver.get("dt")
    if dt is not None:
        dt = _number(dt, "solver.dt")
        if dt <= 0.0:
            raise ScenarioError("'solver.dt' must be > 0")
    return Scenario(spec, tol, dt)


def load_scenario(path: str) -> Scenario:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        if path.endswith(".json"):
            doc = json.loads(text)
        else:
            doc = yaml.safe_load(text)
    except (json.JSONDecodeError, yaml.YAMLError) as exc:
        raise ScenarioError(f"cannot parse {path}: {exc}") from None
    return parse_scenario(doc)


def _num(x):
    return None if x is None or not math.isfinite(x) else x


def solution_document(result: Plan) -> dict:
    sol = result.solution
    opt = sol.optimal
    vp = result.problem.speed_normalization
    ft = result.problem.frame_transform
    xf, yf = ft.position_to_world(opt.params.final_position, opt.t_f)
    return {
        "generator": f"csc-intercept {__version__}",
        "type": opt.path_type.value,
        "beta": opt.beta,
        "alpha": opt.params.alpha,
        "gamma": opt.params.gamma,
        "d": opt.params.d,
        "length": opt.length,
        "t_f": result.t_f,
        "winding": opt.params.winding,
        "final_position_world": [xf, yf],
        "final_heading_world": ft.heading_to_world(result.problem.final_heading),
        "schedule": [{"u": u, "duration": d} for u, d in result.world_schedule.segments],
        "candidates": [
            {
                "type": c.path_type.value,
                "beta": c.beta,
                "alpha": c.params.alpha,
                "gamma": c.params.gamma,
                "d": c.params.d,
                "length": c.length,
                "t_f": c.t_f / vp,
                "winding": c.params.winding,
                "intercept_error": c.intercept_error,
                "heading_error": c.heading_error,
                "separation_ok": c.separation_ok,
            }
            for c in sol.candidates
        ],
        "rejected": [
            {
                "type": r.path_type.value,
                "beta": _num(r.beta),
                "winding": r.winding,
                "reason": r.reason,
                "length": _num(r.length),
            }
            for r in sol.rejected
        ],
        "separation_warning": sol.separation_warning,
        "stationary_fallback": sol.fallback,
    }


def _write_csv(path: str, samples, canonical: bool = False):
    header = CSV_COLUMNS
    if canonical:
        header = ("t", "x", "y", "heading", "u", "x_target", "y_target")
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for s in samples:
            w.writerow([repr(s.t), repr(s.x), repr(s.y), repr(s.heading), int(s.u), repr(s.target_x), repr(s.target_y)])


def run_one(path: str, out_dir: str, args) -> int:
    """Solve one scenario file into ``out_dir``; returns the exit status."""
    try:
        scenario = load_scenario(path)
    except OSError as exc:
        print(f"error: {path}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_INPUT
    except InvalidSpec as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    tol = PROFILES[args.tolerance_profile] if args.tolerance_profile else (scenario.tolerances or PROFILES["default"])
    try:
        result = plan(scenario.spec, tol)
    except InvalidSpec as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NoFeasiblePath as exc:
        print(f"error: {path}: {exc} ({len(exc.rejected)} zeros rejected)", file=sys.stderr)
        return EXIT_INFEASIBLE

    dt = args.dt if args.dt is not None else scenario.dt
    traj = result.sample(dt)
    os.makedirs(out_dir, exist_ok=True)
    with open(os.path.join(out_dir, "solution.json"), "w", encoding="utf-8") as fh:
        json.dump(solution_document(result), fh, indent=2)
        fh.write("\n")
    _write_csv(os.path.join(out_dir, "trajectory.csv"), traj.world)
    if args.emit_canonical:
        _write_csv(os.path.join(out_dir, "trajectory_canonical.csv"), traj.canonical, canonical=True)
    if not args.no_plots:
        from .plotting import render

        render(traj.world, out_dir, title=f"{result.solution.optimal.path_type.value}  t_f = {result.t_f:.4f}")
    opt = result.solution.optimal
    print(f"{path}: {opt.path_type.value} length={opt.length:.6f} t_f={result.t_f:.6f} -> {out_dir}")
    return EXIT_OK


def scenario_files(directory: str) -> List[str]:
    return sorted(
        os.path.join(directory, name)
        for name in os.listdir(directory)
        if name.endswith(SCENARIO_SUFFIXES)
    )


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="csc-intercept",
        description="Time-optimal CSC intercept planning for a Dubins pursuer.",
    )
    p.add_argument("--scenario", required=True, metavar="PATH", help="scenario file (JSON/YAML) or directory of them")
    p.add_argument("--out", default="out", metavar="DIR", help="output directory (default ./out)")
    p.add_argument("--dt", type=float, default=None, metavar="SECONDS", help="sampling step in world time (default t_f/1000)")
    p.add_argument("--emit-canonical", action="store_true", help="also write trajectory_canonical.csv")
    p.add_argument("--tolerance-profile", choices=sorted(PROFILES), default=None, help="solver tolerance profile (default: scenario's, else 'default')")
    p.add_argument("--no-plots", action="store_true", help="skip path.png and control.png")
    p.add_argument("--jobs", type=int, default=None, metavar="N", help="worker threads for a scenario directory")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.dt is not None and not (math.isfinite(args.dt) and args.dt > 0.0):
        print("error: --dt must be a positive number", file=sys.stderr)
        return EXIT_INPUT
    if os.path.isdir(args.scenario):
        files = scenario_files(args.scenario)
        if not files:
            print(f"error: no scenario files in {args.scenario}", file=sys.stderr)
            return EXIT_INPUT
        outs = [os.path.join(args.out, os.path.splitext(os.path.basename(f))[0]) for f in files]
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            codes = list(pool.map(lambda fo: run_one(fo[0], fo[1], args), zip(files, outs)))
        return max(codes)
    return run_one(args.scenario, args.out, args)


if __name__ == "__main__":
    sys.exit(main())
