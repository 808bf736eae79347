import math
import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from csc_intercept import EngagementSpec, canonicalize  # noqa: E402

# criterion number -> (passed, detail); filled by test_acceptance
ACCEPTANCE = {}

CASE_A = dict(target_position0=(3.996, -5.388), target_velocity=(-0.492, -0.0868), final_heading=-1.396)
# same engagement reflected across the y-axis (clockwise heading convention)
CASE_A_MIRRORED = dict(
    target_position0=(-3.996, -5.388), target_velocity=(0.492, -0.0868), final_heading=math.pi + 1.396
)
CASE_B = dict(
    target_position0=(2.8284, 4.2426), target_velocity=(0.0, 0.0), drift=(0.3536, 0.3536), final_heading=3.927
)
CASE_C = dict(
    target_position0=(-5.5535, -0.6391), target_velocity=(0.6368, 0.8759), drift=(0.5, 0.5), final_heading=2.7925
)


@pytest.fixture
def case_a_spec():
    return EngagementSpec(**CASE_A)


@pytest.fixture
def case_a(case_a_spec):
    return canonicalize(case_a_spec)


@pytest.fixture
def case_b_spec():
    return EngagementSpec(**CASE_B)


@pytest.fixture
def case_c_spec():
    return EngagementSpec(**CASE_C)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
