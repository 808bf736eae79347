"""Real roots of polynomials of degree <= 4 and the critical points of G1.

Roots come from the closed form (Ferrari's resolvent for quartics) and are
then polished with damped Newton steps on the original polynomial, since the
radical formulas lose accuracy near repeated roots.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Sequence

from .engagement import TWO_PI, wrap_angle
from .equations import TranscendentalEquation
from .errors import DegenerateAllZero

_LEAD_TOL = 1e-14
_DISC_SLACK = 1e-10


@dataclass(frozen=True)
class Quartic:
    """p1 x^4 + p2 x^3 + p3 x^2 + p4 x + p5"""

    p1: float
    p2: float
    p3: float
    p4: float
    p5: float

    @property
    def coefficients(self):
        return (self.p1, self.p2, self.p3, self.p4, self.p5)

    def __call__(self, x: float) -> float:
        return _horner(self.coefficients, x)

    def reversed(self) -> "Quartic":
        """Polynomial in y = 1/x (coefficients in reverse order)."""
        return Quartic(self.p5, self.p4, self.p3, self.p2, self.p1)


def _horner(coeffs: Sequence[float], x: float) -> float:
    acc = 0.0
    for c in coeffs:
        acc = acc * x + c
    return acc


def _horner_d(coeffs: Sequence[float], x: float):
    p, dp = 0.0, 0.0
    for c in coeffs:
        dp = dp * x + p
        p = p * x + c
    return p, dp


def _magnitude(coeffs: Sequence[float], x: float) -> float:
    ax = abs(x)
    acc = 0.0
    for c in coeffs:
        acc = acc * ax + abs(c)
    return acc


def _quadratic(a: float, b: float, c: float) -> List[float]:
    if a == 0.0:
        return [] if b == 0.0 else [-c / b]
    disc = b * b - 4.0 * a * c
    if disc < 0.0:
        # keep near-double roots; residual filtering decides later
        if disc >= -_DISC_SLACK * (b * b + abs(4.0 * a * c)):
            return [-b / (2.0 * a)]
        return []
    sq = math.sqrt(disc)
    q = -0.5 * (b + math.copysign(sq, b))
    if q == 0.0:
        return [0.0, 0.0]
    return [q / a, c / q]


def _cubic_monic(a: float, b: float, c: float) -> List[float]:
    """Real roots of x^3 + a x^2 + b x + c."""
    q = (a * a - 3.0 * b) / 9.0
    r = (2.0 * a ** 3 - 9.0 * a * b + 27.0 * c) / 54.0
    q3 = q ** 3
    shift = a / 3.0
    if r * r < q3:
        theta = math.acos(max(-1.0, min(1.0, r / math.sqrt(q3))))
        m = -2.0 * math.sqrt(q)
        return [
            m * math.cos(theta / 3.0) - shift,
            m * math.cos((theta + TWO_PI) / 3.0) - shift,
            m * math.cos((theta - TWO_PI) / 3.0) - shift,
        ]
    big = -math.copysign((abs(r) + math.sqrt(r * r - q3)) ** (1.0 / 3.0), r)
    small = q / big if big != 0.0 else 0.0
    out = [big + small - shift]
    if q > 0.0 and r * r - q3 <= _DISC_SLACK * r * r:
        # near the double-root boundary; residual filtering decides later
        out.append(math.copysign(math.sqrt(q), r) - shift)
    return out


def _polish(coeffs: Sequence[float], x: float, steps: int = 8) -> float:
    p, dp = _horner_d(coeffs, x)
    for _ in range(steps):
        if p == 0.0 or dp == 0.0:
            break
        step = p / dp
        lam = 1.0
        while lam > 1e-3:
            xn = x - lam * step
            pn = _horner(coeffs, xn)
            if abs(pn) < abs(p):
                break
            lam *= 0.5
        else:
            break
        x = xn
        p, dp = _horner_d(coeffs, x)
    return x


def _quartic_monic(a: float, b: float, c: float, d: float) -> List[float]:
    """Candidate real roots of x^4 + a x^3 + b x^2 + c x + d (Ferrari)."""
    a2 = a * a
    p = b - 3.0 * a2 / 8.0
    q = c - a * b / 2.0 + a2 * a / 8.0
    r = d - a * c / 4.0 + a2 * b / 16.0 - 3.0 * a2 * a2 / 256.0
    shift = a / 4.0
    scale = max(1.0, abs(p), math.sqrt(abs(r)))
    ys: List[float] = []
    # resolvent: m^3 + p m^2 + (p^2/4 - r) m - q^2/8 = 0 has a root m > 0 when q != 0
    rc = (p, p * p / 4.0 - r, -q * q / 8.0)
    m = max(_cubic_monic(*rc))
    m = _polish((1.0,) + rc, m)
    if m <= 1e-14 * scale:
        for z in _quadratic(1.0, p, r):
            if z > 0.0:
                s = math.sqrt(z)
                ys += [s, -s]
            elif z >= -1e-12 * scale:
                ys.append(0.0)
    else:
        s = math.sqrt(2.0 * m)
        k = q / (2.0 * s)
        ys += _quadratic(1.0, s, p / 2.0 + m - k)
        ys += _quadratic(1.0, -s, p / 2.0 + m + k)
    return [y - shift for y in ys]


def real_roots(q, residual_tol: float = 1e-10, merge_tol: float = 1e-9) -> List[float]:
    """Sorted real roots of a polynomial of degree <= 4.

    ``q`` is a :class:`Quartic` or a coefficient sequence, highest power first
    (shorter sequences are padded with leading zeros).
    """
    coeffs = tuple(float(c) for c in (q.coefficients if isinstance(q, Quartic) else q))
    if len(coeffs) > 5:
        raise ValueError("degree must be <= 4")
    coeffs = (0.0,) * (5 - len(coeffs)) + coeffs
    if not all(math.isfinite(c) for c in coeffs):
        raise ValueError("coefficients must be finite")
    big = max(abs(c) for c in coeffs)
    if big == 0.0:
        raise DegenerateAllZero("all polynomial coefficients are zero")

    work = list(coeffs)
    while work and abs(work[0]) <= _LEAD_TOL * big:
        work.pop(0)
    deg = len(work) - 1
    if deg <= 0:
        return []
    lead = work[0]
    mono = [c / lead for c in work[1:]]
    if deg == 1:
        cands = [-mono[0]]
    elif deg == 2:
        cands = _quadratic(1.0, mono[0], mono[1])
    elif deg == 3:
        cands = _cubic_monic(*mono)
    else:
        cands = _quartic_monic(*mono)

    unit = tuple(c / big for c in coeffs)
    roots = []
    for x in cands:
        if not math.isfinite(x):
            continue
        x = _polish(coeffs, x)
        if abs(_horner(unit, x)) <= residual_tol * max(1.0, _magnitude(unit, x)):
            roots.append(x)
    roots.sort()
    merged: List[float] = []
    for x in roots:
        if merged and abs(x - merged[-1]) <= merge_tol * max(1.0, abs(x)):
            continue
        merged.append(x)
    return merged


def quartic_from_g1(eq: TranscendentalEquation) -> Quartic:
    """Quartic in x = tan(b/2) whose roots are the zeros of G1'(b)."""
    e1, e2, e3, e4, e5 = eq.coefficients
    return Quartic(
        p1=e3 * e3 + e1 * e3 + e4 * e5 - e2 * e4,
        p2=-4.0 * e3 * e4 + 2.0 * e3 * e5,
        p3=2.0 * e1 * e3 - 2.0 * e2 * e4 - 2.0 * e3 * e3 + 4.0 * e4 * e4,
        p4=4.0 * e3 * e4 + 2.0 * e3 * e5,
        p5=e3 * e3 + e1 * e3 - e2 * e4 - e4 * e5,
    )


def critical_points(eq: TranscendentalEquation, merge_tol: float = 1e-9, pole_tol: float = 1e-9) -> List[float]:
    """Zeros of G1' in [0, 2*pi), excluding poles of G1.

    Roots with |tan(b/2)| <= 1 come from the quartic in tan(b/2); the rest
    from the reversed quartic in cot(b/2), which keeps b near pi well
    conditioned.
    """
    if eq.e3 == 0.0 and eq.e4 == 0.0:
        raise DegenerateAllZero("G1 is undefined when e3 = e4 = 0")
    quart = quartic_from_g1(eq)
    rev = quart.reversed()
    big = max(abs(p) for p in quart.coefficients)
    betas = []
    if big == 0.0:
        raise DegenerateAllZero("quartic coefficients vanish")
    if abs(quart.p1) >= 1e-3 * big:
        # roots with |x| > 1 are well separated from infinity: reuse them
        for x in real_roots(quart):
            if abs(x) <= 1.0:
                betas.append(wrap_angle(2.0 * math.atan(x)))
            else:
                y = _polish(rev.coefficients, 1.0 / x)
                betas.append(wrap_angle(2.0 * math.atan2(1.0, y)))
    else:
        for x in real_roots(quart):
            if abs(x) <= 1.0:
                betas.append(wrap_angle(2.0 * math.atan(x)))
        for y in real_roots(rev):
            if abs(y) <= 1.0:
                betas.append(wrap_angle(2.0 * math.atan2(1.0, y)))
    # tan(b/2) is infinite at b = pi; test it directly
    if eq.denominator(math.pi) != 0.0 and abs(eq.g1_prime(math.pi)) <= 1e-9:
        betas.append(math.pi)

    norm = math.hypot(eq.e3, eq.e4)
    out: List[float] = []
    for b in sorted(betas):
        if abs(eq.denominator(b)) <= pole_tol * norm:
            continue
        if out and b - out[-1] <= merge_tol:
            continue
        out.append(b)
    if len(out) > 1 and out[0] + TWO_PI - out[-1] <= merge_tol:
        out.pop()
    return out
