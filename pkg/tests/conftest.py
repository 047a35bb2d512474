import os
import sys

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

from telegraph_reset.params import MotionParams  # noqa: E402

STRADDLING_SETS = [
    MotionParams(1.0, 2.0, 1.0, -1.0),
    MotionParams(1.3, 0.7, 2.0, -0.5),
    MotionParams(1.0, 2.0, 2.0, -4.0),
]
POSITIVE_SETS = [
    MotionParams(1.0, 2.0, 4.0, 2.0),
    MotionParams(0.7, 1.1, 3.0, 1.0),
]
NEGATIVE_SETS = [
    MotionParams(1.3, 0.8, -1.0, -2.0),
    MotionParams(0.6, 1.7, -0.5, -3.0),
]


@pytest.fixture(params=STRADDLING_SETS + POSITIVE_SETS, ids=lambda p: f"{p.regime.value}-{p.v1:g},{p.v2:g}")
def analyzed(request) -> MotionParams:
    return request.param


@pytest.fixture(params=NEGATIVE_SETS, ids=lambda p: f"{p.v1:g},{p.v2:g}")
def negative(request) -> MotionParams:
    return request.param


_CRITERIA: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py::test_criterion_" in report.nodeid:
        name = report.nodeid.split("::", 1)[1]
        _CRITERIA[name] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_CRITERIA):
        terminalreporter.write_line(f"{_CRITERIA[name]}  {name}")
