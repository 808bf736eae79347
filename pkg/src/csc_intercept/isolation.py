"""Find every zero of the beta equations on [0, 2*pi).

Sinusoid equations are solved in closed form.  For the transcendental form G
we split G = D(b) * G1(b) with D = e4 sin b + e3 cos b: zeros where D = 0 come
from G2 analytically, the rest from G1, which is monotone between
consecutive critical points and poles, so one sign test plus bisection per
interval finds them all.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Tuple

from .config import DEFAULT, Tolerances
from .engagement import TWO_PI, wrap_angle
from .equations import SinusoidEquation, TranscendentalEquation
from .polyroots import critical_points


@dataclass(frozen=True)
class ZeroSet:
    zeros: Tuple[float, ...] = ()
    methods: Tuple[str, ...] = ()

    def __iter__(self):
        return iter(zip(self.zeros, self.methods))

    def __len__(self):
        return len(self.zeros)


def _merged(pairs, tol: float) -> ZeroSet:
    pairs = sorted((wrap_angle(b), m) for b, m in pairs)
    out: List[Tuple[float, str]] = []
    for b, m in pairs:
        if out and b - out[-1][0] <= tol:
            continue
        out.append((b, m))
    if len(out) > 1 and out[0][0] + TWO_PI - out[-1][0] <= tol:
        out.pop()
    return ZeroSet(tuple(b for b, _ in out), tuple(m for _, m in out))


def solve_sinusoid(eq: SinusoidEquation, tol: Tolerances = DEFAULT) -> ZeroSet:
    """Zeros of k1 + k2 sin b + k3 cos b, written as R sin(b + phi) = -k1."""
    R = math.hypot(eq.k2, eq.k3)
    if R == 0.0:
        return ZeroSet()
    phi = math.atan2(eq.k3, eq.k2)
    ratio = -eq.k1 / R
    if abs(ratio) > 1.0 + 1e-12:
        return ZeroSet()
    if abs(ratio) >= 1.0 - 1e-15:
        # tangency
        return _merged([(math.copysign(0.5 * math.pi, ratio) - phi, "analytic")], tol.merge)
    s = math.asin(ratio)
    return _merged([(s - phi, "analytic"), (math.pi - s - phi, "analytic")], tol.merge)


def pole_angles(eq: TranscendentalEquation) -> List[float]:
    """The two angles in [0, 2*pi) where e4 sin b + e3 cos b = 0."""
    if eq.e3 == 0.0 and eq.e4 == 0.0:
        return []
    b = wrap_angle(math.atan2(-eq.e3, eq.e4))
    return sorted({b, wrap_angle(b + math.pi)})


def solve_g2(eq: TranscendentalEquation, tol: Tolerances = DEFAULT) -> ZeroSet:
    """Zeros of e5 + e1 sin b + e2 cos b that sit on a pole of G1."""
    poles = pole_angles(eq)
    if not poles:
        return ZeroSet()
    if eq.e1 == 0.0 and eq.e2 == 0.0 and eq.e5 == 0.0:
        return _merged([(b, "analytic") for b in poles], tol.merge)
    norm = math.hypot(eq.e3, eq.e4)
    keep = [
        (b, m)
        for b, m in solve_sinusoid(eq.as_sinusoid(), tol)
        if abs(eq.denominator(b)) <= 1e-9 * norm
    ]
    return _merged(keep, tol.merge)


def isolate_g1(eq: TranscendentalEquation, tol: Tolerances = DEFAULT) -> ZeroSet:
    """Every zero of G1 on [0, 2*pi) by sign tests on monotone pieces."""
    poles = pole_angles(eq)
    crit = critical_points(eq, merge_tol=tol.merge)
    points = sorted(set([0.0, TWO_PI] + crit + poles))
    pole_set = set(poles)
    e1, e2, e3, e4, e5 = eq.coefficients
    sin, cos = math.sin, math.cos

    def g1(b):
        s, c = sin(b), cos(b)
        return b + (e5 + e1 * s + e2 * c) / (e4 * s + e3 * c)

    zero_tol = tol.endpoint_zero * TWO_PI
    width = tol.bisection_width

    found = []
    for left, right in zip(points[:-1], points[1:]):
        if right - left <= 2.0 * tol.pole_inset:
            continue
        a = left + tol.pole_inset if left in pole_set else left
        b = right - tol.pole_inset if right in pole_set else right
        ga = g1(a)
        if left not in pole_set and abs(ga) <= zero_tol:
            found.append((left, "endpoint"))
            continue
        gb = g1(b)
        if ga * gb < 0.0:
            # plain bisection, G1 inlined; this loop dominates solve time
            neg = ga < 0.0
            for _ in range(tol.bisection_max_iter):
                if b - a <= width:
                    break
                mid = 0.5 * (a + b)
                s, c = sin(mid), cos(mid)
                fm = mid + (e5 + e1 * s + e2 * c) / (e4 * s + e3 * c)
                if fm == 0.0:
                    a = b = mid
                    break
                if (fm < 0.0) == neg:
                    a = mid
                else:
                    b = mid
            found.append((0.5 * (a + b), "bisection"))
    return _merged(found, tol.merge)


def all_zeros(eq, tol: Tolerances = DEFAULT) -> ZeroSet:
    """All zeros of a beta equation on [0, 2*pi), residual-checked against G itself."""
    if isinstance(eq, SinusoidEquation):
        zs = solve_sinusoid(eq, tol)
    elif eq.is_sinusoid:
        zs = solve_sinusoid(eq.as_sinusoid(), tol)
    else:
        zs = _merged(list(solve_g2(eq, tol)) + list(isolate_g1(eq, tol)), tol.merge)
    limit = tol.residual * max(eq.scale, 1e-300)
    kept = [(b, m) for b, m in zs if abs(eq(b)) <= limit]
    return ZeroSet(tuple(b for b, _ in kept), tuple(m for _, m in kept))
