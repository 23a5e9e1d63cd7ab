from pathlib import Path

import pytest

from astopo import samples

FIXTURES = Path(__file__).resolve().parents[1] / "src" / "astopo" / "fixtures"
DATA = Path(__file__).resolve().parent / "data"


def image_oracle(c, X, n):
    """Level-n image straight from the pair set."""
    pairs = c.gen.levels[n].pairs
    return frozenset(y for (x, y) in pairs if x in X) | frozenset(X)


@pytest.fixture
def E1():
    return samples.e1()


@pytest.fixture
def E1B():
    return samples.e1_blocks()


@pytest.fixture
def E2():
    return samples.e2()


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import LINES
    if LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(LINES):
            terminalreporter.write_line(LINES[k])
