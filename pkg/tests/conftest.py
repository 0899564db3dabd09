import pytest

from downset import CodeSpec, Downset, Grid, PrimeField

ACCEPTANCE_LINES: list[str] = []


def make_spec(p, sets, downset):
    return CodeSpec(Grid(PrimeField(p), sets), downset)


@pytest.fixture
def f3_plane():
    """F_3, S = {0,1,2}^2, total degree <= 1 (mu = 6)."""
    return make_spec(3, [[0, 1, 2], [0, 1, 2]], Downset.total_degree(2, 1))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
