import pytest
from hypothesis import HealthCheck, settings

from expanse import Context

settings.register_profile("default", max_examples=150, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

E2_TEXT = "(<1/6>a*+<1/3>b*)*"
F2_TEXT = "<1/6>a*+<1/3>b*"
E3_TEXT = "<2>ab<+<3>(a+b){+}"


@pytest.fixture
def qab():
    return Context("ab", "q")


@pytest.fixture
def zab():
    return Context("ab", "z")


@pytest.fixture
def bab():
    return Context("ab", "b")


@pytest.fixture
def e2(qab):
    return qab.parse(E2_TEXT)


@pytest.fixture
def e3(zab):
    return zab.parse(E3_TEXT)


def pytest_terminal_summary(terminalreporter):
    from acceptance_log import RESULTS
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
