"""Fixed-step RK4 integration of the Dubins kinematics, used as an independent check.

Steps are aligned to the control switches: each constant-control segment is
split into ceil(length / h) equal steps with h = step_fraction * t_f, so no
step straddles a discontinuity in u.  Batches of schedules are integrated
together with numpy.
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from .engagement import HALF_PI


def _rhs(state: np.ndarray, u_over_rho: np.ndarray) -> np.ndarray:
    out = np.empty_like(state)
    out[:, 0] = np.cos(state[:, 2])
    out[:, 1] = np.sin(state[:, 2])
    out[:, 2] = u_over_rho
    return out


def integrate_rk4_batch(
    schedules: Sequence,
    rhos,
    step_fraction: float = 1e-4,
    initial=(0.0, 0.0, HALF_PI),
) -> np.ndarray:
    """Terminal poses (N, 3) for N three-segment schedules at unit speed.

    ``schedules`` holds ControlSchedule objects or raw ``((u, duration), ...)``
    sequences; ``rhos`` is a scalar or one turn radius per schedule.
    """
    segs = [tuple(getattr(s, "segments", s)) for s in schedules]
    n = len(segs)
    state = np.tile(np.asarray(initial, dtype=float), (n, 1))
    if n == 0:
        return state
    rho = np.broadcast_to(np.asarray(rhos, dtype=float), (n,))
    t_f = np.array([sum(d for _, d in s) for s in segs])
    h_nom = step_fraction * np.where(t_f > 0.0, t_f, 1.0)
    n_seg = len(segs[0])
    for k in range(n_seg):
        u = np.array([s[k][0] for s in segs], dtype=float)
        dur = np.array([s[k][1] for s in segs], dtype=float)
        steps = np.ceil(dur / h_nom - 1e-9).astype(int)
        steps = np.maximum(steps, 0)
        h = np.where(steps > 0, dur / np.maximum(steps, 1), 0.0)
        w = u / rho
        for i in range(int(steps.max(initial=0))):
            hk = np.where(i < steps, h, 0.0)[:, None]
            k1 = _rhs(state, w)
            k2 = _rhs(state + 0.5 * hk * k1, w)
            k3 = _rhs(state + 0.5 * hk * k2, w)
            k4 = _rhs(state + hk * k3, w)
            state = state + hk / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    return state


def integrate_rk4(schedule, rho: float = 1.0, step_fraction: float = 1e-4, initial=(0.0, 0.0, HALF_PI)):
    """Terminal (x, y, heading) of one schedule; heading is not wrapped."""
    x, y, h = integrate_rk4_batch([schedule], rho, step_fraction, initial)[0]
    return float(x), float(y), float(h)


def terminal_residuals(candidate, problem, step_fraction: float = 1e-4):
    """(position error, heading error) of an RK4-propagated candidate at its t_f."""
    from .engagement import angle_diff
    from .planner import extract_schedule

    params = getattr(candidate, "params", candidate)
    x, y, h = integrate_rk4(extract_schedule(params, problem), problem.turn_radius, step_fraction)
    tx, ty = problem.target_at(params.length)
    return math.hypot(x - tx, y - ty), abs(angle_diff(h, problem.final_heading))
