import pytest

from saturable.apolarity import dual_ring
from saturable.replication import plane


@pytest.fixture
def S():
    return plane()


@pytest.fixture
def a(S):
    return S.gens()


@pytest.fixture
def D(S):
    return dual_ring(S)


@pytest.fixture
def x(D):
    return D.gens()


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
