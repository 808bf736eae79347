"""Scenario data and the reduction to the canonical engagement frame.

The canonical frame puts the pursuer at the origin heading north (pi/2) with
unit speed.  A constant drift ``w`` is absorbed by solving against the
effective target velocity ``v - w``; positions are mapped back to the ground
frame by adding ``w * t``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Tuple

from .errors import InvalidSpec, SpeedRatioViolation

TWO_PI = 2.0 * math.pi
HALF_PI = 0.5 * math.pi

Vec2 = Tuple[float, float]


def wrap_angle(angle: float) -> float:
    """Reduce an angle into [0, 2*pi)."""
    a = math.fmod(angle, TWO_PI)
    if a < 0.0:
        a += TWO_PI
    # fmod of a tiny negative number can round up to exactly 2*pi
    if a >= TWO_PI:
        a -= TWO_PI
    return a


def angle_diff(a: float, b: float) -> float:
    """Signed difference a - b folded into [-pi, pi)."""
    return wrap_angle(a - b + math.pi) - math.pi


def _rotate(p: Vec2, angle: float) -> Vec2:
    c, s = math.cos(angle), math.sin(angle)
    return (c * p[0] - s * p[1], s * p[0] + c * p[1])


def _vec(value, name: str) -> Vec2:
    try:
        x, y = value
        out = (float(x), float(y))
    except (TypeError, ValueError) as exc:
        raise InvalidSpec(f"{name} must be a 2-vector, got {value!r}") from exc
    if not all(math.isfinite(c) for c in out):
        raise InvalidSpec(f"{name} must be finite, got {out}")
    return out


@dataclass(frozen=True)
class EngagementSpec:
    """A raw engagement in world coordinates.

    Exactly one of ``impact_angle`` (relative to the effective target
    heading) or ``final_heading`` (absolute pursuer heading at intercept)
    must be given.
    """

    target_position0: Vec2
    target_velocity: Vec2
    impact_angle: Optional[float] = None
    final_heading: Optional[float] = None
    pursuer_position: Vec2 = (0.0, 0.0)
    pursuer_heading: float = HALF_PI
    pursuer_speed: float = 1.0
    turn_radius: float = 1.0
    drift: Vec2 = (0.0, 0.0)

    def __post_init__(self):
        for name in ("target_position0", "target_velocity", "pursuer_position", "drift"):
            object.__setattr__(self, name, _vec(getattr(self, name), name))
        for name in ("pursuer_speed", "turn_radius"):
            value = float(getattr(self, name))
            if not math.isfinite(value) or value <= 0.0:
                raise InvalidSpec(f"{name} must be finite and > 0, got {value}")
            object.__setattr__(self, name, value)
        heading = float(self.pursuer_heading)
        if not math.isfinite(heading):
            raise InvalidSpec("pursuer_heading must be finite")
        object.__setattr__(self, "pursuer_heading", wrap_angle(heading))
        if (self.impact_angle is None) == (self.final_heading is None):
            raise InvalidSpec("give exactly one of impact_angle or final_heading")
        for name in ("impact_angle", "final_heading"):
            value = getattr(self, name)
            if value is not None:
                value = float(value)
                if not math.isfinite(value):
                    raise InvalidSpec(f"{name} must be finite")
                object.__setattr__(self, name, wrap_angle(value))

    @property
    def effective_velocity(self) -> Vec2:
        return (
            self.target_velocity[0] - self.drift[0],
            self.target_velocity[1] - self.drift[1],
        )


@dataclass(frozen=True)
class FrameTransform:
    """Canonical -> world map: rotate by ``rotation``, shift by ``origin``,
    divide time by ``speed`` and add drift displacement ``drift * t``."""

    rotation: float = 0.0
    origin: Vec2 = (0.0, 0.0)
    drift: Vec2 = (0.0, 0.0)
    speed: float = 1.0

    def time_to_world(self, tau: float) -> float:
        return tau / self.speed

    def position_to_world(self, p: Vec2, tau: float) -> Vec2:
        t = tau / self.speed
        q = _rotate(p, self.rotation)
        return (
            q[0] + self.origin[0] + self.drift[0] * t,
            q[1] + self.origin[1] + self.drift[1] * t,
        )

    def heading_to_world(self, heading: float) -> float:
        return wrap_angle(heading + self.rotation)


@dataclass(frozen=True)
class CanonicalProblem:
    """Engagement in the canonical frame (pursuer at origin, heading pi/2, V_P = 1)."""

    turn_radius: float
    target_position0: Vec2
    effective_target_velocity: Vec2
    final_heading: float
    frame_transform: FrameTransform = field(default_factory=FrameTransform)
    speed_normalization: float = 1.0
    stationary_speed: float = 1e-9

    initial_heading = HALF_PI

    def __post_init__(self):
        object.__setattr__(self, "final_heading", wrap_angle(float(self.final_heading)))
        object.__setattr__(self, "target_position0", _vec(self.target_position0, "target_position0"))
        object.__setattr__(
            self,
            "effective_target_velocity",
            _vec(self.effective_target_velocity, "effective_target_velocity"),
        )
        if not self.turn_radius > 0.0:
            raise InvalidSpec("turn_radius must be > 0")
        if self.target_speed >= 1.0:
            raise SpeedRatioViolation(
                f"effective target speed {self.target_speed:.6g} must be < pursuer speed 1"
            )

    @property
    def rho(self) -> float:
        return self.turn_radius

    @property
    def vx(self) -> float:
        return self.effective_target_velocity[0]

    @property
    def vy(self) -> float:
        return self.effective_target_velocity[1]

    @property
    def target_speed(self) -> float:
        return math.hypot(*self.effective_target_velocity)

    @property
    def target_heading(self) -> float:
        return wrap_angle(math.atan2(self.vy, self.vx))

    @property
    def is_stationary(self) -> bool:
        return self.target_speed < self.stationary_speed

    def target_at(self, tau: float) -> Vec2:
        return (
            self.target_position0[0] + self.vx * tau,
            self.target_position0[1] + self.vy * tau,
        )


@dataclass(frozen=True)
class TrajectorySample:
    """Pursuer pose, active control and target position at one instant."""

    t: float
    x: float
    y: float
    heading: float
    target_x: float
    target_y: float
    u: float = 0.0


def canonicalize(spec: EngagementSpec, stationary_speed: float = 1e-9) -> CanonicalProblem:
    """Reduce ``spec`` to the canonical frame.

    Rotates by pi/2 - heading about the pursuer, translates the pursuer to the
    origin and rescales time so the pursuer speed is one.  Lengths are
    unchanged, so ``turn_radius`` carries over as is.
    """
    vp = spec.pursuer_speed
    rel_speed = math.hypot(*spec.effective_velocity)
    if rel_speed >= vp:
        raise SpeedRatioViolation(
            f"|v - w| = {rel_speed:.6g} must be < pursuer speed {vp:.6g}"
        )
    rot = HALF_PI - spec.pursuer_heading
    p0 = spec.pursuer_position
    rel = (spec.target_position0[0] - p0[0], spec.target_position0[1] - p0[1])
    target0 = _rotate(rel, rot)
    ev = spec.effective_velocity
    vel = _rotate((ev[0] / vp, ev[1] / vp), rot)

    if spec.final_heading is not None:
        final = spec.final_heading + rot
    else:
        if rel_speed < stationary_speed * vp:
            raise InvalidSpec("impact_angle is undefined for a stationary effective target")
        final = spec.impact_angle + math.atan2(vel[1], vel[0])

    return CanonicalProblem(
        turn_radius=spec.turn_radius,
        target_position0=target0,
        effective_target_velocity=vel,
        final_heading=final,
        frame_transform=FrameTransform(rotation=-rot, origin=p0, drift=spec.drift, speed=vp),
        speed_normalization=vp,
        stationary_speed=stationary_speed,
    )


def to_world(problem: CanonicalProblem, samples: Iterable[TrajectorySample]) -> list:
    """Map canonical samples (canonical time, positions, headings) to the world frame."""
    ft = problem.frame_transform
    out = []
    for s in samples:
        x, y = ft.position_to_world((s.x, s.y), s.t)
        tx, ty = ft.position_to_world((s.target_x, s.target_y), s.t)
        out.append(
            TrajectorySample(
                t=ft.time_to_world(s.t),
                x=x,
                y=y,
                heading=ft.heading_to_world(s.heading),
                target_x=tx,
                target_y=ty,
                u=s.u,
            )
        )
    return out


def check_separation(problem: CanonicalProblem, candidate_final_position: Sequence[float]) -> bool:
    """True when the intercept point is at least 4 turn radii from the start."""
    x, y = candidate_final_position
    return math.hypot(x, y) >= 4.0 * problem.turn_radius
