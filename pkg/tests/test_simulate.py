import math

import numpy as np
import pytest

from csc_intercept import ControlSchedule, solve
from csc_intercept.simulate import integrate_rk4, integrate_rk4_batch, terminal_residuals
from oracles import rk4_path


def test_pure_straight_segment():
    x, y, h = integrate_rk4(ControlSchedule(((0, 0.0), (0, 3.0), (0, 0.0))))
    assert (x, y, h) == pytest.approx((0.0, 3.0, math.pi / 2), abs=1e-12)


def test_full_left_circle_closes():
    x, y, h = integrate_rk4(ControlSchedule(((1, 2 * math.pi), (0, 0.0), (1, 0.0))))
    assert (x, y) == pytest.approx((0.0, 0.0), abs=1e-10)
    assert h == pytest.approx(2.5 * math.pi, abs=1e-10)


def test_turn_radius_scales_arcs():
    # quarter turn right with radius 2 ends at (2, 2) facing east
    x, y, h = integrate_rk4(ControlSchedule(((-1, math.pi), (0, 0.0), (-1, 0.0))), rho=2.0)
    assert (x, y, h) == pytest.approx((2.0, 2.0, 0.0), abs=1e-10)


def test_batch_matches_scalar_oracle():
    rng = np.random.default_rng(0)
    scheds = []
    for _ in range(40):
        us = rng.choice([-1, 1], 2)
        scheds.append(((int(us[0]), rng.uniform(0, 4)), (0, rng.uniform(0, 6)), (int(us[1]), rng.uniform(0, 4))))
    out = integrate_rk4_batch(scheds, 1.0, step_fraction=1e-3)
    for s, (x, y, h) in zip(scheds, out):
        rx, ry, rh = rk4_path([u for u, _ in s], [d for _, d in s], step_fraction=1e-3)
        assert (x, y, h) == pytest.approx((rx, ry, rh), abs=1e-12)


def test_batch_mixed_radii_and_empty():
    assert integrate_rk4_batch([], 1.0).shape == (0, 3)
    s = ((1, 1.0), (0, 1.0), (-1, 1.0))
    a = integrate_rk4_batch([s, s], [1.0, 3.0])
    assert a[0] == pytest.approx(integrate_rk4(s, 1.0), abs=1e-14)
    assert a[1] == pytest.approx(integrate_rk4(s, 3.0), abs=1e-14)


def test_candidates_survive_integration(case_a):
    for c in solve(case_a).candidates:
        pos, head = terminal_residuals(c, case_a)
        assert pos < 1e-9 and head < 1e-9
