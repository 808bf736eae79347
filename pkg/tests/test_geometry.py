import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from csc_intercept import (
    TYPE_ORDER,
    CanonicalProblem,
    DegenerateDenominator,
    NegativeSegment,
    PathType,
    alpha_of_beta,
    d_of_beta,
    gamma_of_beta,
    reconstruct,
    solve,
)
from csc_intercept.geometry import circle_centers, pose_at, winding_index
from csc_intercept.planner import extract_schedule
from oracles import heading_error, random_canonical, rk4_path

PI = math.pi
angle = st.floats(0, 2 * PI, allow_nan=False, exclude_max=True)


def printed_d(path_type, beta, p):
    """d(beta) exactly as the slope-form closed expressions read."""
    rho, k = p.turn_radius, p.vy / p.vx
    (x0, y0), th = p.target_position0, p.final_heading
    s, c = math.sin(beta), math.cos(beta)
    den = s - k * c
    if path_type is PathType.RSR:
        num = k * rho - k * rho * math.sin(th) - k * x0 + y0 - rho * math.cos(th)
    elif path_type is PathType.LSL:
        num = -k * rho + k * rho * math.sin(th) - k * x0 + y0 + rho * math.cos(th)
    elif path_type is PathType.RSL:
        num = k * rho - 2 * k * rho * s - k * rho * math.cos(th + PI / 2) - 2 * rho * c - k * x0 + y0 + rho * math.sin(th + PI / 2)
    else:
        num = -k * rho + 2 * k * rho * s - k * rho * math.cos(th - PI / 2) + 2 * rho * c - k * x0 + y0 + rho * math.sin(th - PI / 2)
    return num / den


def test_initial_circle_centers():
    p = CanonicalProblem(1.0, (5, 5), (0.1, 0), PI / 2)
    c0r, c0l, cfr, cfl = circle_centers(p, (0.0, 0.0))
    assert c0r == (1.0, 0.0) and c0l == (-1.0, 0.0)
    assert cfr == pytest.approx((1.0, 0.0), abs=1e-15)
    assert cfl == pytest.approx((-1.0, 0.0), abs=1e-15)


def test_final_circle_centers():
    p = CanonicalProblem(2.0, (5, 5), (0.1, 0), 0.0)
    _, _, cfr, cfl = circle_centers(p, (5.0, 5.0))
    assert cfr == pytest.approx((5.0, 3.0))
    assert cfl == pytest.approx((5.0, 7.0))


@pytest.mark.parametrize(
    "turn, beta, expected",
    [("R", PI / 2, 0.0), ("R", PI, 1.5 * PI), ("L", 0.0, 1.5 * PI), ("L", PI / 2, 0.0), ("R", 0.0, PI / 2)],
)
def test_alpha_of_beta(turn, beta, expected):
    assert alpha_of_beta(turn, beta) == pytest.approx(expected)


@pytest.mark.parametrize(
    "turn, beta, theta, expected",
    [("R", 1.3, 1.3, 0.0), ("R", 1.0, 2.0, 1.0 - 2.0 + 2 * PI), ("L", 1.0, 2.0, 1.0), ("L", 2.0, 1.0, 1.0 - 2.0 + 2 * PI)],
)
def test_gamma_of_beta(turn, beta, theta, expected):
    assert gamma_of_beta(turn, beta, theta) == pytest.approx(expected)


def test_bad_turn_letter():
    with pytest.raises(ValueError):
        alpha_of_beta("S", 1.0)


@settings(max_examples=300, deadline=None)
@given(angle, angle)
def test_arcs_in_range(beta, theta):
    for t in "RL":
        assert 0.0 <= alpha_of_beta(t, beta) < 2 * PI
        assert 0.0 <= gamma_of_beta(t, beta, theta) <= 2 * PI


@settings(max_examples=300, deadline=None)
@given(angle, angle)
def test_arc_headings_match_beta(beta, theta):
    # turning by alpha from pi/2 lands on beta; by gamma from beta lands on theta
    for t, sign in (("R", -1), ("L", 1)):
        assert heading_error(PI / 2 + sign * alpha_of_beta(t, beta), beta) < 1e-12
        assert heading_error(beta + sign * gamma_of_beta(t, beta, theta), theta) < 1e-12


@pytest.mark.parametrize("ptype", TYPE_ORDER)
def test_d_matches_slope_form(ptype):
    rng = np.random.default_rng(11)
    for _ in range(200):
        t0, v, th = random_canonical(rng)
        if abs(v[0]) < 0.05:
            continue
        p = CanonicalProblem(rng.uniform(0.5, 2.0), t0, v, th)
        beta = rng.uniform(0, 2 * PI)
        try:
            ours = d_of_beta(ptype, beta, p)
        except DegenerateDenominator:
            continue
        assert ours == pytest.approx(printed_d(ptype, beta, p), rel=1e-9, abs=1e-9)


def test_d_rsr_two_equation_oracle():
    # c_f = c_0 + d (cos b, sin b) and (y_f - y0) v_x = (x_f - x0) v_y, solved as a linear system
    rng = np.random.default_rng(5)
    for _ in range(200):
        t0, v, th = random_canonical(rng)
        p = CanonicalProblem(1.0, t0, v, th)
        b = rng.uniform(0, 2 * PI)
        # unknowns (x_f, y_f, d)
        A = np.array(
            [
                [1.0, 0.0, -math.cos(b)],
                [0.0, 1.0, -math.sin(b)],
                [-v[1], v[0], 0.0],
            ]
        )
        off = (math.cos(th - PI / 2), math.sin(th - PI / 2))
        rhs = np.array([1.0 - off[0], -off[1], v[0] * t0[1] - v[1] * t0[0]])
        if abs(np.linalg.det(A)) < 1e-6:
            continue
        xf, yf, d = np.linalg.solve(A, rhs)
        assert d_of_beta(PathType.RSR, b, p) == pytest.approx(d, rel=1e-9, abs=1e-9)


def test_zero_numerator_gives_zero_d():
    # RSR with alpha = gamma = 0 straight up the y-axis: final point (0, 4) sits on
    # a target line through (0, 4)
    p = CanonicalProblem(1.0, (-3.0, 4.0), (0.3, 0.0), PI / 2)
    assert d_of_beta(PathType.RSR, PI / 2, p) == pytest.approx(4.0)
    p = CanonicalProblem(1.0, (-3.0, 0.0), (0.3, 0.0), PI / 2)
    assert d_of_beta(PathType.RSR, PI / 2, p) == pytest.approx(0.0, abs=1e-15)


def test_degenerate_denominator():
    p = CanonicalProblem(1.0, (3.0, 4.0), (0.3, 0.0), 1.0)
    with pytest.raises(DegenerateDenominator):
        d_of_beta(PathType.RSL, 0.0, p)


def test_pure_straight_path():
    p = CanonicalProblem(1.0, (0.0, 5.0), (0.0, 0.5), PI / 2)
    c = reconstruct(PathType.RSR, PI / 2, p)
    assert c.alpha == 0.0 and c.gamma == 0.0
    assert c.d == pytest.approx(10.0)
    assert c.length == pytest.approx(10.0)
    x, y, h = rk4_path((0,), (c.d,))
    assert (x, y) == pytest.approx(p.target_at(c.length), abs=1e-9)


def test_negative_segment():
    # target behind the pursuer and moving further away: the straight segment would run backwards
    p = CanonicalProblem(1.0, (0.0, -5.0), (0.0, -0.5), PI / 2)
    with pytest.raises(NegativeSegment):
        reconstruct(PathType.RSR, PI / 2, p)


@pytest.mark.parametrize("ptype", TYPE_ORDER)
def test_forward_integration_lands_on_final_position(ptype):
    rng = np.random.default_rng(21)
    checked = 0
    while checked < 40:
        t0, v, th = random_canonical(rng)
        p = CanonicalProblem(rng.uniform(0.5, 2.0), t0, v, th)
        try:
            c = reconstruct(ptype, rng.uniform(0, 2 * PI), p)
        except NegativeSegment:
            continue
        sched = extract_schedule(c)
        x, y, h = rk4_path([u for u, _ in sched.segments], [d for _, d in sched.segments], p.turn_radius)
        assert (x, y) == pytest.approx(c.final_position, abs=1e-8)
        assert heading_error(h, th) < 1e-8
        # closed-form pose agrees too
        assert pose_at(c, c.length)[:2] == pytest.approx(c.final_position, abs=1e-9)
        checked += 1


def test_tangency_at_segment_joints():
    rng = np.random.default_rng(2)
    for ptype in TYPE_ORDER:
        t0, v, th = random_canonical(rng)
        p = CanonicalProblem(1.0, t0, v, th)
        b = 2.0
        try:
            c = reconstruct(ptype, b, p)
        except NegativeSegment:
            continue
        s1, s2, _ = c.segment_lengths
        assert heading_error(pose_at(c, s1)[2], b) < 1e-12
        assert heading_error(pose_at(c, s1 + s2)[2], b) < 1e-12


def test_interception_consistency_of_solved_candidates(case_a):
    sol = solve(case_a)
    for cand in sol.candidates:
        assert cand.params.final_position == pytest.approx(case_a.target_at(cand.t_f), abs=1e-8)
        assert cand.params.winding == winding_index(cand.path_type, cand.beta, case_a.final_heading)


def test_winding_rules():
    th = 1.0
    for b in map(float, np.linspace(0.01, 2 * PI - 0.01, 50)):
        assert winding_index(PathType.RSR, b, th) == (b > PI / 2) + (th > b)
        assert winding_index(PathType.LSL, b, th) == (b < PI / 2) + (b > th)
        assert winding_index(PathType.RSL, b, th) == (b > PI / 2) + (b > th)
        assert winding_index(PathType.LSR, b, th) == (b < PI / 2) + (th > b)
