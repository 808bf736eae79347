"""Circle-straight-circle geometry: arc radians and segment length as functions of beta.

beta is the orientation of the straight segment.  For a fixed path type the
first arc, last arc and straight length all follow from beta in closed form;
the root equations then pick the beta values that also satisfy the
equal-time (interception) condition.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional, Tuple

from .config import DEFAULT, Tolerances
from .engagement import HALF_PI, TWO_PI, CanonicalProblem, Vec2, wrap_angle
from .errors import DegenerateDenominator, NegativeSegment, WindingMismatch


class PathType(str, enum.Enum):
    RSR = "RSR"
    RSL = "RSL"
    LSL = "LSL"
    LSR = "LSR"

    @property
    def first(self) -> str:
        return self._value_[0]

    @property
    def last(self) -> str:
        return self._value_[2]

    @property
    def controls(self) -> Tuple[int, int, int]:
        """Steering input per segment: R -> -1, S -> 0, L -> +1."""
        return (turn_sign(self.first), 0, turn_sign(self.last))


# tie-break order for equal lengths
TYPE_ORDER = (PathType.RSR, PathType.RSL, PathType.LSL, PathType.LSR)


def turn_sign(turn: str) -> int:
    if turn == "L":
        return 1
    if turn == "R":
        return -1
    raise ValueError(f"turn must be 'L' or 'R', got {turn!r}")


@dataclass(frozen=True)
class CscParameters:
    path_type: PathType
    alpha: float
    beta: float
    gamma: float
    d: float
    final_position: Vec2
    winding: int
    rho: float = 1.0

    @property
    def length(self) -> float:
        return self.rho * (self.alpha + self.gamma) + self.d

    @property
    def segment_lengths(self) -> Tuple[float, float, float]:
        return (self.rho * self.alpha, self.d, self.rho * self.gamma)


def circle_centers(problem: CanonicalProblem, final_position: Vec2):
    """Right/left turning-circle centres at the start and at ``final_position``.

    Returns ``(c0_r, c0_l, cf_r, cf_l)``.
    """
    rho = problem.turn_radius
    th = problem.final_heading
    xf, yf = final_position
    c0_r = (rho, 0.0)
    c0_l = (-rho, 0.0)
    cf_r = (xf + rho * math.cos(th - HALF_PI), yf + rho * math.sin(th - HALF_PI))
    cf_l = (xf + rho * math.cos(th + HALF_PI), yf + rho * math.sin(th + HALF_PI))
    return c0_r, c0_l, cf_r, cf_l


def alpha_of_beta(turn: str, beta: float) -> float:
    """Radians of the first arc that turns heading pi/2 into ``beta``."""
    if turn == "R":
        if 0.0 <= beta <= HALF_PI:
            return HALF_PI - beta
        return 2.5 * math.pi - beta
    if turn == "L":
        if beta >= HALF_PI:
            return beta - HALF_PI
        return beta + 1.5 * math.pi
    raise ValueError(f"turn must be 'L' or 'R', got {turn!r}")


def gamma_of_beta(turn: str, beta: float, final_heading: float) -> float:
    """Radians of the last arc that turns heading ``beta`` into ``final_heading``."""
    th = final_heading
    if turn == "R":
        if 0.0 <= th <= beta:
            return beta - th
        return beta - th + TWO_PI
    if turn == "L":
        if 0.0 <= beta <= th:
            return th - beta
        return th - beta + TWO_PI
    raise ValueError(f"turn must be 'L' or 'R', got {turn!r}")


def base_arc_sum(path_type: PathType, beta: float, final_heading: float) -> float:
    """alpha + gamma with the 2*pi*n winding term removed."""
    th0, th = HALF_PI, final_heading
    if path_type is PathType.RSR:
        return th0 - th
    if path_type is PathType.LSL:
        return th - th0
    if path_type is PathType.RSL:
        return th0 + th - 2.0 * beta
    return 2.0 * beta - th0 - th


def winding_index(path_type: PathType, beta: float, final_heading: float) -> int:
    """Integer n with alpha + gamma = base_arc_sum + 2*pi*n at this beta."""
    total = alpha_of_beta(path_type.first, beta) + gamma_of_beta(path_type.last, beta, final_heading)
    return round((total - base_arc_sum(path_type, beta, final_heading)) / TWO_PI)


def _d_numerator(path_type: PathType, beta: float, problem: CanonicalProblem) -> float:
    # d numerators multiplied through by v_x
    rho = problem.turn_radius
    vx, vy = problem.vx, problem.vy
    x0, y0 = problem.target_position0
    th = problem.final_heading
    if path_type is PathType.RSR:
        return vy * rho - vy * rho * math.sin(th) - vy * x0 + vx * y0 - vx * rho * math.cos(th)
    if path_type is PathType.LSL:
        return -vy * rho + vy * rho * math.sin(th) - vy * x0 + vx * y0 + vx * rho * math.cos(th)
    sb, cb = math.sin(beta), math.cos(beta)
    if path_type is PathType.RSL:
        return (
            vy * rho
            - 2.0 * vy * rho * sb
            - vy * rho * math.cos(th + HALF_PI)
            - 2.0 * vx * rho * cb
            - vy * x0
            + vx * y0
            + vx * rho * math.sin(th + HALF_PI)
        )
    return (
        -vy * rho
        + 2.0 * vy * rho * sb
        - vy * rho * math.cos(th - HALF_PI)
        + 2.0 * vx * rho * cb
        - vy * x0
        + vx * y0
        + vx * rho * math.sin(th - HALF_PI)
    )


def d_of_beta(
    path_type: PathType,
    beta: float,
    problem: CanonicalProblem,
    eps: float = DEFAULT.denominator,
) -> float:
    """Signed straight-segment length that puts the intercept on the target's line.

    Raises DegenerateDenominator when the segment is (numerically) parallel to
    the target's line of motion, i.e. |sin(beta - theta_T)| <= eps.
    """
    speed = problem.target_speed
    if speed == 0.0:
        raise DegenerateDenominator("target line undefined for a stationary target")
    den = (problem.vx * math.sin(beta) - problem.vy * math.cos(beta)) / speed
    if abs(den) <= eps:
        raise DegenerateDenominator(
            f"segment at beta={beta:.12g} is parallel to the target line"
        )
    return _d_numerator(path_type, beta, problem) / speed / den


def _center_offset(path_type: PathType, beta: float, rho: float) -> Vec2:
    """c_f - c_0 - d*(cos b, sin b) for each type."""
    if path_type is PathType.RSL:
        return (2.0 * rho * math.cos(beta + HALF_PI), 2.0 * rho * math.sin(beta + HALF_PI))
    if path_type is PathType.LSR:
        return (2.0 * rho * math.cos(beta - HALF_PI), 2.0 * rho * math.sin(beta - HALF_PI))
    return (0.0, 0.0)


def final_position(path_type: PathType, beta: float, d: float, problem: CanonicalProblem) -> Vec2:
    """Intercept point from the centre relation c_f = c_0 + offset + d * (cos b, sin b)."""
    rho = problem.turn_radius
    th = problem.final_heading
    c0x = rho if path_type.first == "R" else -rho
    ox, oy = _center_offset(path_type, beta, rho)
    cfx = c0x + ox + d * math.cos(beta)
    cfy = oy + d * math.sin(beta)
    shift = th - HALF_PI if path_type.last == "R" else th + HALF_PI
    return (cfx - rho * math.cos(shift), cfy - rho * math.sin(shift))


def d_from_timing(path_type: PathType, beta: float, arc_sum: float, problem: CanonicalProblem) -> float:
    """Least-squares d from the equal-time vector relation.

    final(d) = target(rho * arc_sum + d) is linear in d; used when the
    closed form degenerates.  |u - v| >= 1 - |v| > 0, so this never divides by 0.
    """
    rho = problem.turn_radius
    vx, vy = problem.vx, problem.vy
    x0, y0 = problem.target_position0
    p = final_position(path_type, beta, 0.0, problem)
    t_arc = rho * arc_sum
    px = p[0] - x0 - vx * t_arc
    py = p[1] - y0 - vy * t_arc
    wx, wy = math.cos(beta) - vx, math.sin(beta) - vy
    return -(px * wx + py * wy) / (wx * wx + wy * wy)


def _snap_arcs(path_type, beta, alpha, gamma, n, problem, tol):
    target = base_arc_sum(path_type, beta, problem.final_heading) + TWO_PI * n
    diff = target - (alpha + gamma)
    if abs(diff) <= tol:
        return alpha, gamma
    if abs(diff + TWO_PI) <= 1e-6:
        # beta sits a rounding error past a branch boundary: one arc reads ~2*pi
        # where this branch wants ~0
        if TWO_PI - alpha <= tol:
            return max(alpha - TWO_PI, 0.0), gamma
        if TWO_PI - gamma <= tol:
            return alpha, max(gamma - TWO_PI, 0.0)
    raise WindingMismatch(
        f"{path_type.value} at beta={beta:.12g}: arcs give n={winding_index(path_type, beta, problem.final_heading)}, branch n={n}"
    )


def reconstruct(
    path_type: PathType,
    beta: float,
    problem: CanonicalProblem,
    winding: Optional[int] = None,
    tol: Tolerances = DEFAULT,
) -> CscParameters:
    """Assemble the full CSC path for a given beta.

    When ``winding`` is given the arcs must agree with it (up to a boundary
    snap); otherwise the winding is read off the arcs.
    """
    path_type = PathType(path_type)
    beta = wrap_angle(beta)
    alpha = alpha_of_beta(path_type.first, beta)
    gamma = gamma_of_beta(path_type.last, beta, problem.final_heading)
    if winding is None:
        winding = winding_index(path_type, beta, problem.final_heading)
    else:
        alpha, gamma = _snap_arcs(path_type, beta, alpha, gamma, winding, problem, tol.winding_snap)
    try:
        d = d_of_beta(path_type, beta, problem, tol.denominator)
    except DegenerateDenominator:
        d = d_from_timing(path_type, beta, alpha + gamma, problem)
    if d < -tol.negative_d:
        raise NegativeSegment(f"{path_type.value} at beta={beta:.12g}: d={d:.6g} < 0")
    d = max(d, 0.0)
    return CscParameters(
        path_type=path_type,
        alpha=alpha,
        beta=beta,
        gamma=gamma,
        d=d,
        final_position=final_position(path_type, beta, d, problem),
        winding=winding,
        rho=problem.turn_radius,
    )


def advance(x: float, y: float, heading: float, u: int, s: float, rho: float):
    """Exact solution of the Dubins kinematics for arc length ``s`` at constant ``u``."""
    if u == 0:
        return x + s * math.cos(heading), y + s * math.sin(heading), heading
    h1 = heading + u * s / rho
    return (
        x + u * rho * (math.sin(h1) - math.sin(heading)),
        y - u * rho * (math.cos(h1) - math.cos(heading)),
        h1,
    )


def pose_at(params: CscParameters, s: float):
    """Pose after travelling arc length ``s`` (clamped to the path) from (0, 0, pi/2)."""
    x, y, h = 0.0, 0.0, HALF_PI
    remaining = min(max(s, 0.0), params.length)
    for u, seg in zip(params.path_type.controls, params.segment_lengths):
        step = min(seg, remaining)
        x, y, h = advance(x, y, h, u, step, params.rho)
        remaining -= step
        if remaining <= 0.0:
            break
    return x, y, wrap_angle(h)
