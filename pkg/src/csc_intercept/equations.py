"""Equal-time equations in beta for the four CSC types.

RSR and LSL reduce to ``k1 + k2 sin b + k3 cos b = 0``; RSL and LSR pick up a
``b * (...)`` term because the arc radians depend on beta, giving

    G(b) = e1 sin b + e2 cos b + b (e3 cos b + e4 sin b) + e5.

Coefficients are written with the 1/v_x factors cleared, which leaves them
finite when the effective target moves vertically.

Two corrections relative to the printed coefficient lists (both confirmed by
symbolic elimination and by forward integration of the resulting paths):

* RSL: ``2 rho v_y`` multiplies ``b cos b`` and ``-2 rho v_x`` multiplies
  ``b sin b``.
* LSR: the winding enters as ``theta_0 + theta_f - 2 n pi``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List

from .engagement import HALF_PI, TWO_PI, CanonicalProblem
from .geometry import PathType, winding_index


@dataclass(frozen=True)
class SinusoidEquation:
    """k1 + k2 sin(b) + k3 cos(b) = 0"""

    k1: float
    k2: float
    k3: float

    def __call__(self, beta: float) -> float:
        return self.k1 + self.k2 * math.sin(beta) + self.k3 * math.cos(beta)

    @property
    def scale(self) -> float:
        return abs(self.k1) + abs(self.k2) + abs(self.k3)


@dataclass(frozen=True)
class TranscendentalEquation:
    """G(b) = e1 sin b + e2 cos b + b (e3 cos b + e4 sin b) + e5"""

    e1: float
    e2: float
    e3: float
    e4: float
    e5: float

    @classmethod
    def from_sorted_terms(cls, const, sin, cos, beta_sin, beta_cos):
        """Build from ``const + sin*sin b + cos*cos b + b(beta_sin*sin b + beta_cos*cos b)``."""
        return cls(e1=sin, e2=cos, e3=beta_cos, e4=beta_sin, e5=const)

    @property
    def coefficients(self):
        return (self.e1, self.e2, self.e3, self.e4, self.e5)

    @property
    def scale(self) -> float:
        return abs(self.e1) + abs(self.e2) + abs(self.e5) + TWO_PI * (abs(self.e3) + abs(self.e4))

    @property
    def is_sinusoid(self) -> bool:
        return self.e3 == 0.0 and self.e4 == 0.0

    def __call__(self, beta: float) -> float:
        s, c = math.sin(beta), math.cos(beta)
        return self.e1 * s + self.e2 * c + beta * (self.e3 * c + self.e4 * s) + self.e5

    def numerator(self, beta: float) -> float:
        return self.e5 + self.e1 * math.sin(beta) + self.e2 * math.cos(beta)

    def denominator(self, beta: float) -> float:
        return self.e4 * math.sin(beta) + self.e3 * math.cos(beta)

    def g1(self, beta: float) -> float:
        return beta + self.numerator(beta) / self.denominator(beta)

    def g1_prime(self, beta: float) -> float:
        e1, e2, e3, e4, e5 = self.coefficients
        s, c = math.sin(beta), math.cos(beta)
        den = e3 * c + e4 * s
        top = (e1 * c - e2 * s) * den - (e1 * s + e2 * c + e5) * (e4 * c - e3 * s)
        return 1.0 + top / (den * den)

    def as_sinusoid(self) -> SinusoidEquation:
        return SinusoidEquation(self.e5, self.e1, self.e2)


@dataclass(frozen=True)
class WindingBranch:
    """Fixed winding index n for one path type.

    A zero found on this branch is kept only where the arcs' actual winding
    at that beta equals ``n``.
    """

    path_type: PathType
    n: int
    from_table: bool = True

    def accepts(self, beta: float, final_heading: float, tol: float = 1e-9) -> bool:
        for b in (beta, beta - tol, beta + tol):
            if winding_index(self.path_type, b % TWO_PI, final_heading) == self.n:
                return True
        return False


def _setup(problem: CanonicalProblem):
    x0, y0 = problem.target_position0
    th = problem.final_heading
    return problem.turn_radius, problem.vx, problem.vy, x0, y0, th, math.sin(th), math.cos(th)


def build_rsr(problem: CanonicalProblem, branch: WindingBranch = None) -> SinusoidEquation:
    rho, vx, vy, x0, y0, th, st, ct = _setup(problem)
    n = table_winding(PathType.RSR, th) if branch is None else branch.n
    lag = rho * (HALF_PI - th + 2.0 * n * math.pi)
    a1 = (rho - rho * st) * vy - vy * x0 + vx * y0 - rho * ct * vx
    a2 = -rho + rho * st + x0 + lag * vx
    a3 = -y0 + rho * ct - lag * vy
    return SinusoidEquation(a1, a2, a3)


def build_lsl(problem: CanonicalProblem, branch: WindingBranch = None) -> SinusoidEquation:
    rho, vx, vy, x0, y0, th, st, ct = _setup(problem)
    n = table_winding(PathType.LSL, th) if branch is None else branch.n
    lag = rho * (th - HALF_PI + 2.0 * n * math.pi)
    b1 = (-rho + rho * st) * vy - vy * x0 + vx * y0 + rho * ct * vx
    b2 = rho - rho * st + x0 + lag * vx
    b3 = -lag * vy - y0 - rho * ct
    return SinusoidEquation(b1, b2, b3)


def build_rsl(problem: CanonicalProblem, branch: WindingBranch) -> TranscendentalEquation:
    rho, vx, vy, x0, y0, th, st, ct = _setup(problem)
    lag = rho * (HALF_PI + th + 2.0 * branch.n * math.pi)
    c1 = 2.0 * rho + (rho + rho * st) * vy + rho * ct * vx - vy * x0 + vx * y0
    c2 = -2.0 * rho * vy + x0 + lag * vx - rho - rho * st
    c3 = -2.0 * rho * vx - lag * vy - rho * ct - y0
    c4 = 2.0 * rho * vy
    c5 = -2.0 * rho * vx
    return TranscendentalEquation.from_sorted_terms(c1, c2, c3, beta_sin=c5, beta_cos=c4)


def build_lsr(problem: CanonicalProblem, branch: WindingBranch) -> TranscendentalEquation:
    rho, vx, vy, x0, y0, th, st, ct = _setup(problem)
    lag = rho * (HALF_PI + th - 2.0 * branch.n * math.pi)
    d1 = -2.0 * rho + (-rho - rho * st) * vy - rho * ct * vx - vy * x0 + vx * y0
    d2 = 2.0 * rho * vy + x0 - lag * vx + rho + rho * st
    d3 = 2.0 * rho * vx + lag * vy + rho * ct - y0
    d4 = 2.0 * rho * vx
    d5 = -2.0 * rho * vy
    return TranscendentalEquation.from_sorted_terms(d1, d2, d3, beta_sin=d4, beta_cos=d5)


BUILDERS = {
    PathType.RSR: build_rsr,
    PathType.LSL: build_lsl,
    PathType.RSL: build_rsl,
    PathType.LSR: build_lsr,
}


def build_equation(path_type: PathType, problem: CanonicalProblem, branch: WindingBranch):
    return BUILDERS[PathType(path_type)](problem, branch)


def table_winding(path_type: PathType, final_heading: float) -> int:
    """Single winding index used for RSR/LSL when arcs total less than a full turn."""
    if path_type is PathType.RSR:
        return 0 if final_heading < HALF_PI else 1
    if path_type is PathType.LSL:
        return 0 if final_heading >= HALF_PI else 1
    raise ValueError("only RSR and LSL have a heading-only winding rule")


def enumerate_branches(
    path_type: PathType, problem: CanonicalProblem, exhaustive: bool = True
) -> List[WindingBranch]:
    """Winding branches to solve for ``path_type``.

    RSL/LSR always get n in {0, 1, 2}.  RSR/LSL get the single heading-based
    branch unless ``exhaustive``, in which case all three are returned (the
    extra two cover paths whose arcs add up to a full turn or more).
    """
    path_type = PathType(path_type)
    if path_type in (PathType.RSL, PathType.LSR):
        return [WindingBranch(path_type, n) for n in (0, 1, 2)]
    n0 = table_winding(path_type, problem.final_heading)
    branches = [WindingBranch(path_type, n0)]
    if exhaustive:
        branches += [WindingBranch(path_type, n, from_table=False) for n in (0, 1, 2) if n != n0]
    return branches
