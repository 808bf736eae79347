"""Time-optimal CSC intercept paths for a Dubins pursuer against a constant-velocity target."""

from .config import DEFAULT, PROFILES, STRICT, Tolerances
from .engagement import (
    CanonicalProblem,
    EngagementSpec,
    FrameTransform,
    TrajectorySample,
    canonicalize,
    check_separation,
    to_world,
)
from .equations import (
    SinusoidEquation,
    TranscendentalEquation,
    WindingBranch,
    build_equation,
    build_lsl,
    build_lsr,
    build_rsl,
    build_rsr,
    enumerate_branches,
)
from .errors import (
    DegenerateAllZero,
    DegenerateDenominator,
    InterceptError,
    InvalidSpec,
    NegativeSegment,
    NoFeasiblePath,
    SpeedRatioViolation,
    WindingMismatch,
)
from .geometry import (
    TYPE_ORDER,
    CscParameters,
    PathType,
    alpha_of_beta,
    d_of_beta,
    gamma_of_beta,
    reconstruct,
)
from .isolation import ZeroSet, all_zeros, isolate_g1, solve_g2, solve_sinusoid
from .planner import (
    CandidatePath,
    ControlSchedule,
    Plan,
    Rejection,
    SampledTrajectory,
    Solution,
    extract_schedule,
    plan,
    sample_trajectory,
    solve,
    solve_stationary_fallback,
    validate_candidate,
)
from .polyroots import Quartic, critical_points, quartic_from_g1, real_roots

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
