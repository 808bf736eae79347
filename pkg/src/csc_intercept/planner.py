"""Full solve: equations -> zeros -> candidate paths -> shortest valid path."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .config import DEFAULT, Tolerances
from .engagement import (
    HALF_PI,
    CanonicalProblem,
    EngagementSpec,
    TrajectorySample,
    angle_diff,
    canonicalize,
    check_separation,
    to_world,
)
from .equations import SinusoidEquation, build_equation, enumerate_branches
from .errors import DegenerateDenominator, NegativeSegment, NoFeasiblePath, WindingMismatch
from .geometry import (
    TYPE_ORDER,
    CscParameters,
    PathType,
    alpha_of_beta,
    base_arc_sum,
    final_position,
    gamma_of_beta,
    pose_at,
    reconstruct,
    winding_index,
)
from .isolation import all_zeros, solve_sinusoid


@dataclass(frozen=True)
class ControlSchedule:
    """Three (u, duration) segments; u in {-1, 0, +1}."""

    segments: Tuple[Tuple[int, float], ...]

    @property
    def duration(self) -> float:
        return sum(d for _, d in self.segments)

    @property
    def switch_times(self) -> Tuple[float, float]:
        t1 = self.segments[0][1]
        return (t1, t1 + self.segments[1][1])

    def control_at(self, t: float) -> int:
        end = 0.0
        last = self.segments[0][0]
        for u, dur in self.segments:
            if dur <= 0.0:
                continue
            end += dur
            last = u
            if t < end:
                return u
        return last

    def scaled(self, factor: float) -> "ControlSchedule":
        return ControlSchedule(tuple((u, d * factor) for u, d in self.segments))


@dataclass(frozen=True)
class ValidityRecord:
    valid: bool
    reason: Optional[str]
    intercept_error: float
    heading_error: float
    t_f: float


@dataclass(frozen=True)
class CandidatePath:
    params: CscParameters
    t_f: float
    intercept_error: float
    heading_error: float
    separation_ok: bool
    zero_method: str = "analytic"

    @property
    def path_type(self) -> PathType:
        return self.params.path_type

    @property
    def length(self) -> float:
        return self.params.length

    @property
    def beta(self) -> float:
        return self.params.beta


@dataclass(frozen=True)
class Rejection:
    path_type: PathType
    beta: float
    winding: int
    reason: str
    length: Optional[float] = None


@dataclass(frozen=True)
class ZeroRecord:
    """One zero of one branch equation, kept for diagnostics."""

    path_type: PathType
    winding: int
    beta: float
    method: str
    branch_ok: bool


@dataclass(frozen=True)
class Solution:
    optimal: CandidatePath
    candidates: Tuple[CandidatePath, ...]
    rejected: Tuple[Rejection, ...]
    schedule: ControlSchedule
    separation_warning: bool
    zeros: Tuple[ZeroRecord, ...] = ()
    fallback: bool = False

    @property
    def t_f(self) -> float:
        return self.optimal.t_f

    def candidate(self, path_type) -> Optional[CandidatePath]:
        path_type = PathType(path_type)
        for c in self.candidates:
            if c.path_type is path_type:
                return c
        return None

    def zero_count(self, path_type, accepted_only: bool = True) -> int:
        path_type = PathType(path_type)
        return sum(
            1 for z in self.zeros if z.path_type is path_type and (z.branch_ok or not accepted_only)
        )


def extract_schedule(candidate: CscParameters, problem: CanonicalProblem = None) -> ControlSchedule:
    """Bang-off-bang controls and durations in canonical time (V_P = 1)."""
    u = candidate.path_type.controls
    return ControlSchedule(tuple(zip(u, candidate.segment_lengths)))


def validate_candidate(
    candidate: CscParameters,
    problem: CanonicalProblem,
    tol: Tolerances = DEFAULT,
    integrator: str = "exact",
) -> ValidityRecord:
    """Accept a reconstructed path only if it really intercepts at the right heading.

    ``integrator="exact"`` propagates the piecewise-constant controls in
    closed form; ``"rk4"`` uses the fixed-step oracle from :mod:`simulate`.
    """
    t_f = candidate.length

    def reject(reason, ie=math.inf, he=math.inf):
        return ValidityRecord(False, reason, ie, he, t_f)

    if candidate.d < -tol.negative_d:
        return reject("negative_segment")
    if not t_f > 0.0:
        return reject("nonpositive_time")
    arcs = candidate.alpha + candidate.gamma
    expected = base_arc_sum(candidate.path_type, candidate.beta, problem.final_heading)
    if abs(arcs - expected - 2.0 * math.pi * candidate.winding) > 1e-6:
        return reject("winding")

    if integrator == "exact":
        x, y, h = pose_at(candidate, t_f)
    elif integrator == "rk4":
        from .simulate import integrate_rk4

        x, y, h = integrate_rk4(extract_schedule(candidate), problem.turn_radius)
    else:
        raise ValueError(f"unknown integrator {integrator!r}")
    tx, ty = problem.target_at(t_f)
    ie = math.hypot(x - tx, y - ty)
    he = abs(angle_diff(h, problem.final_heading))
    if ie > tol.intercept:
        return reject("intercept_miss", ie, he)
    if he > tol.heading:
        return reject("heading_miss", ie, he)
    return ValidityRecord(True, None, ie, he, t_f)


def _pick_optimal(candidates, tol: Tolerances) -> CandidatePath:
    order = {p: i for i, p in enumerate(TYPE_ORDER)}
    best = None
    for c in sorted(candidates, key=lambda c: order[c.path_type]):
        if best is None or c.length < best.length - tol.tie:
            best = c
    return best


def _finish(problem, accepted, rejected, zeros, tol, fallback=False) -> Solution:
    per_type = {}
    for cand in accepted:
        cur = per_type.get(cand.path_type)
        if cur is None or cand.length < cur.length:
            per_type[cand.path_type] = cand
    best_ids = {id(c) for c in per_type.values()}
    seen = []
    for cand in accepted:
        if id(cand) in best_ids:
            continue
        best = per_type[cand.path_type]
        # same path reached from two branches at a winding boundary
        if abs(cand.length - best.length) <= 1e-9 and abs(angle_diff(cand.beta, best.beta)) <= 1e-9:
            continue
        if any(abs(cand.length - s) <= 1e-9 for s in seen):
            continue
        seen.append(cand.length)
        rejected.append(
            Rejection(cand.path_type, cand.beta, cand.params.winding, "dominated", cand.length)
        )
    candidates = tuple(per_type[p] for p in TYPE_ORDER if p in per_type)
    if not candidates:
        raise NoFeasiblePath("no CSC candidate satisfies the terminal conditions", rejected)
    optimal = _pick_optimal(candidates, tol)
    return Solution(
        optimal=optimal,
        candidates=candidates,
        rejected=tuple(rejected),
        schedule=extract_schedule(optimal.params, problem),
        separation_warning=any(not c.separation_ok for c in accepted),
        zeros=tuple(zeros),
        fallback=fallback,
    )


def _accept(params, problem, tol, method, accepted, rejected):
    record = validate_candidate(params, problem, tol)
    if record.valid:
        accepted.append(
            CandidatePath(
                params=params,
                t_f=record.t_f,
                intercept_error=record.intercept_error,
                heading_error=record.heading_error,
                separation_ok=check_separation(problem, params.final_position),
                zero_method=method,
            )
        )
    else:
        rejected.append(
            Rejection(params.path_type, params.beta, params.winding, record.reason, params.length)
        )


def solve(problem: CanonicalProblem, tol: Tolerances = DEFAULT, exhaustive: bool = True) -> Solution:
    """Shortest valid CSC intercept for a canonical problem."""
    if problem.is_stationary:
        return solve_stationary_fallback(problem, tol)
    accepted: List[CandidatePath] = []
    rejected: List[Rejection] = []
    zeros: List[ZeroRecord] = []
    th = problem.final_heading
    for ptype in TYPE_ORDER:
        for branch in enumerate_branches(ptype, problem, exhaustive):
            eq = build_equation(ptype, problem, branch)
            found = solve_sinusoid(eq, tol) if isinstance(eq, SinusoidEquation) else all_zeros(eq, tol)
            for beta, method in found:
                ok = branch.accepts(beta, th, tol.winding_snap)
                zeros.append(ZeroRecord(ptype, branch.n, beta, method, ok))
                if not ok:
                    rejected.append(Rejection(ptype, beta, branch.n, "winding"))
                    continue
                try:
                    params = reconstruct(ptype, beta, problem, branch.n, tol)
                except NegativeSegment:
                    rejected.append(Rejection(ptype, beta, branch.n, "negative_segment"))
                    continue
                except (WindingMismatch, DegenerateDenominator) as exc:
                    rejected.append(Rejection(ptype, beta, branch.n, type(exc).__name__))
                    continue
                _accept(params, problem, tol, method, accepted, rejected)
    return _finish(problem, accepted, rejected, zeros, tol)


def solve_stationary_fallback(problem: CanonicalProblem, tol: Tolerances = DEFAULT) -> Solution:
    """Classical fixed-endpoint Dubins CSC when the effective target does not move."""
    rho = problem.turn_radius
    th = problem.final_heading
    tx, ty = problem.target_position0
    accepted: List[CandidatePath] = []
    rejected: List[Rejection] = []
    zeros: List[ZeroRecord] = []
    for ptype in TYPE_ORDER:
        c0x = rho if ptype.first == "R" else -rho
        shift = th - HALF_PI if ptype.last == "R" else th + HALF_PI
        cfx, cfy = tx + rho * math.cos(shift), ty + rho * math.sin(shift)
        dx, dy = cfx - c0x, cfy
        dist = math.hypot(dx, dy)
        heading = math.atan2(dy, dx)
        if ptype.first == ptype.last:
            beta, d = heading, dist
        else:
            if dist < 2.0 * rho:
                rejected.append(Rejection(ptype, float("nan"), 0, "circles_overlap"))
                continue
            d = math.sqrt(max(dist * dist - 4.0 * rho * rho, 0.0))
            tilt = math.atan2(2.0 * rho, d)
            beta = heading - tilt if ptype is PathType.RSL else heading + tilt
        beta %= 2.0 * math.pi
        zeros.append(ZeroRecord(ptype, winding_index(ptype, beta, th), beta, "analytic", True))
        params = CscParameters(
            path_type=ptype,
            alpha=alpha_of_beta(ptype.first, beta),
            beta=beta,
            gamma=gamma_of_beta(ptype.last, beta, th),
            d=d,
            final_position=final_position(ptype, beta, d, problem),
            winding=winding_index(ptype, beta, th),
            rho=rho,
        )
        _accept(params, problem, tol, "analytic", accepted, rejected)
    return _finish(problem, accepted, rejected, zeros, tol, fallback=True)


@dataclass(frozen=True)
class SampledTrajectory:
    canonical: Tuple[TrajectorySample, ...]
    world: Tuple[TrajectorySample, ...]


def sample_trajectory(candidate: CscParameters, problem: CanonicalProblem, dt: float) -> SampledTrajectory:
    """Closed-form samples at t = 0, dt, 2 dt, ... plus exactly t_f (canonical time)."""
    if not dt > 0.0:
        raise ValueError("dt must be > 0")
    t_f = candidate.length
    schedule = extract_schedule(candidate, problem)
    times = []
    k = 0
    while True:
        t = k * dt
        if t >= t_f - 1e-12 * max(1.0, t_f):
            break
        times.append(t)
        k += 1
    times.append(t_f)
    canonical = []
    for t in times:
        x, y, h = pose_at(candidate, t)
        tx, ty = problem.target_at(t)
        canonical.append(TrajectorySample(t, x, y, h, tx, ty, schedule.control_at(t)))
    return SampledTrajectory(tuple(canonical), tuple(to_world(problem, canonical)))


@dataclass(frozen=True)
class Plan:
    """A solved world-frame engagement."""

    spec: EngagementSpec
    problem: CanonicalProblem
    solution: Solution

    @property
    def t_f(self) -> float:
        return self.problem.frame_transform.time_to_world(self.solution.t_f)

    @property
    def world_schedule(self) -> ControlSchedule:
        return self.solution.schedule.scaled(1.0 / self.problem.speed_normalization)

    def sample(self, dt: Optional[float] = None) -> SampledTrajectory:
        """Sample with a world-time step (default t_f / 1000)."""
        if dt is None:
            dt = self.t_f / 1000.0
        return sample_trajectory(
            self.solution.optimal.params, self.problem, dt * self.problem.speed_normalization
        )


def plan(spec: EngagementSpec, tol: Tolerances = DEFAULT, exhaustive: bool = True) -> Plan:
    problem = canonicalize(spec, stationary_speed=tol.stationary_speed)
    return Plan(spec, problem, solve(problem, tol, exhaustive))
