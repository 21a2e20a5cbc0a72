import math

import pytest

from statmech import EnergySpectrum, make_uniform

LN2 = math.log(2.0)


@pytest.fixture
def two_level():
    """Levels 0 and 1 at beta = ln 2, so zeta = 1 + 1/2."""
    return EnergySpectrum.from_levels([(0.0, 1), (1.0, 1)]), LN2


@pytest.fixture
def uniform_small():
    return make_uniform(0.0, 0.5, 6)


ACCEPTANCE_LINES = []


@pytest.fixture
def criterion():
    """Record one acceptance line (printed in the terminal summary) and assert it."""

    def record(number, title, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title}" + (f" ({detail})" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
