"""Exception hierarchy shared by the solver modules."""


class InterceptError(Exception):
    """Base class for all solver errors."""


class InvalidSpec(InterceptError, ValueError):
    """Scenario fields are non-finite, non-positive, or inconsistent."""


class SpeedRatioViolation(InvalidSpec):
    """Effective target speed is not strictly below the pursuer speed."""


class DegenerateDenominator(InterceptError):
    """Straight segment is parallel to the target's line of motion."""


class NegativeSegment(InterceptError):
    """Closed-form straight-segment length came out negative."""


class WindingMismatch(InterceptError):
    """Arc radians at this beta disagree with the branch's winding index."""


class DegenerateAllZero(InterceptError):
    """Every polynomial coefficient vanished, so every x is a root."""


class NoFeasiblePath(InterceptError):
    """No candidate of any type survived validation."""

    def __init__(self, message, rejected=()):
        super().__init__(message)
        self.rejected = tuple(rejected)
