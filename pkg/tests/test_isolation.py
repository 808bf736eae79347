import math

import numpy as np
import pytest

from csc_intercept import (
    PathType,
    SinusoidEquation,
    TranscendentalEquation,
    WindingBranch,
    all_zeros,
    build_equation,
    critical_points,
    isolate_g1,
    solve_g2,
    solve_sinusoid,
)
from csc_intercept.isolation import pole_angles
from oracles import cyclic_match, sweep_zeros_g

PI = math.pi


def test_sinusoid_two_zeros():
    zs = solve_sinusoid(SinusoidEquation(0.0, 1.0, 0.0))
    assert zs.zeros == pytest.approx((0.0, PI), abs=1e-15)
    assert zs.methods == ("analytic", "analytic")


def test_sinusoid_tangency():
    assert solve_sinusoid(SinusoidEquation(-1.0, 1.0, 0.0)).zeros == pytest.approx((PI / 2,))


def test_sinusoid_no_zero():
    assert len(solve_sinusoid(SinusoidEquation(2.0, 1.0, 0.0))) == 0
    assert len(solve_sinusoid(SinusoidEquation(1.0, 0.0, 0.0))) == 0


def test_sinusoid_zeros_are_in_range_and_exact():
    rng = np.random.default_rng(0)
    for _ in range(500):
        eq = SinusoidEquation(*rng.uniform(-1, 1, 3))
        for b in solve_sinusoid(eq).zeros:
            assert 0.0 <= b < 2 * PI
            assert abs(eq(b)) <= 1e-12 * eq.scale


def test_g2_identically_zero_on_poles():
    assert solve_g2(TranscendentalEquation(0, 0, 1, 0, 0)).zeros == pytest.approx((PI / 2, 1.5 * PI))


def test_g2_disjoint_from_poles():
    assert len(solve_g2(TranscendentalEquation(1, 0, 1, 0, 0))) == 0


def test_g2_generic_case_a_is_empty(case_a):
    for n in (0, 1, 2):
        assert len(solve_g2(build_equation(PathType.RSL, case_a, WindingBranch(PathType.RSL, n)))) == 0


def test_g2_common_zero_with_pole():
    # e1 sin + e5 vanishes at b = pi/2 where cos b = 0
    eq = TranscendentalEquation(1.0, 0.0, 1.0, 0.0, -1.0)
    assert solve_g2(eq).zeros == pytest.approx((PI / 2,))
    assert any(abs(b - PI / 2) < 1e-9 for b in all_zeros(eq).zeros)


def test_pure_sinusoid_through_all_zeros():
    assert all_zeros(TranscendentalEquation(1, 0, 0, 0, 0)).zeros == pytest.approx((0.0, PI), abs=1e-15)


@pytest.mark.parametrize("ptype", [PathType.RSL, PathType.LSR])
def test_case_a_branch_equations_have_two_zeros(case_a, ptype):
    for n in (0, 1, 2):
        assert len(all_zeros(build_equation(ptype, case_a, WindingBranch(ptype, n)))) == 2


def test_zero_set_invariants():
    rng = np.random.default_rng(1)
    for _ in range(300):
        eq = TranscendentalEquation(*rng.uniform(-1, 1, 5))
        zs = all_zeros(eq)
        z = list(zs.zeros)
        assert z == sorted(z)
        assert all(b2 - b1 > 1e-9 for b1, b2 in zip(z, z[1:]))
        for b, m in zs:
            assert abs(eq(b)) <= 1e-8 * eq.scale
            assert m in ("analytic", "bisection", "endpoint")


@pytest.mark.parametrize("seed", range(4))
def test_matches_dense_sweep(seed):
    rng = np.random.default_rng(100 + seed)
    for _ in range(25):
        e = rng.uniform(-1, 1, 5)
        ours = all_zeros(TranscendentalEquation(*e)).zeros
        ref = sweep_zeros_g(e, n=200_000)
        assert len(ours) == len(ref)
        assert cyclic_match(ref, ours, 1e-7)
        assert cyclic_match(ours, ref, 1e-7)


def test_g1_monotone_between_breakpoints():
    rng = np.random.default_rng(2)
    for _ in range(200):
        eq = TranscendentalEquation(*rng.uniform(-1, 1, 5))
        pts = sorted(set([0.0, 2 * PI] + critical_points(eq) + pole_angles(eq)))
        for a, b in zip(pts, pts[1:]):
            if b - a < 1e-6:
                continue
            signs = {
                math.copysign(1.0, eq.g1_prime(x))
                for x in np.linspace(a, b, 12)[1:-1]
                if abs(eq.g1_prime(x)) > 1e-9
            }
            assert len(signs) <= 1


def test_endpoint_zero_detected():
    # G1 = b + (e5 + e1 sin b)/cos b vanishes at b = 0 when e5 = 0
    eq = TranscendentalEquation(0.5, 0.0, 1.0, 0.0, 0.0)
    zs = isolate_g1(eq)
    assert zs.zeros[0] == 0.0
    assert zs.methods[0] == "endpoint"


def test_bisection_is_deterministic():
    eq = TranscendentalEquation(0.3, -0.7, 0.2, 0.9, 0.1)
    assert all_zeros(eq) == all_zeros(eq)
