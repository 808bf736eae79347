"""Numerical tolerances, grouped so the CLI can switch profiles."""

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Tolerances:
    # root isolation
    bisection_width: float = 1e-12
    bisection_max_iter: int = 200
    merge: float = 1e-9
    residual: float = 1e-8
    pole_inset: float = 1e-9
    endpoint_zero: float = 1e-12
    # geometry
    denominator: float = 1e-10
    negative_d: float = 1e-9
    winding_snap: float = 1e-9
    stationary_speed: float = 1e-9
    # validation
    intercept: float = 1e-6
    heading: float = 1e-8
    tie: float = 1e-9


DEFAULT = Tolerances()
STRICT = replace(
    DEFAULT,
    bisection_width=1e-14,
    residual=1e-10,
    intercept=1e-8,
    heading=1e-10,
)

PROFILES = {"default": DEFAULT, "strict": STRICT}
