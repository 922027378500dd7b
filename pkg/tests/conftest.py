import random

import pytest

from cliffblend.quat import AlgebraSpec

HAMILTON = AlgebraSpec(-1, -1)
MINUS_ONE_MINUS_THREE = AlgebraSpec(-1, -3)


@pytest.fixture
def H():
    return HAMILTON


@pytest.fixture(params=[(-1, -1), (-1, -3), (-2, -5)], ids=lambda ab: f"H{ab}")
def algebra(request):
    return AlgebraSpec(*request.param)


@pytest.fixture
def rng():
    return random.Random(20240601)


# -- acceptance summary -------------------------------------------------------

_ACCEPTANCE = []


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _ACCEPTANCE.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _ACCEPTANCE:
        mark = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{mark}  {name}")
