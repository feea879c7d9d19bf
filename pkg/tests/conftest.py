import math

import pytest

from polarloss import MirrorModel, SystemParams


@pytest.fixture
def resonant():
    """omega_c = omega_x = 1, L = pi, c = 1, g = 0.1."""
    return SystemParams.from_geometry(1.0, 0.1)


@pytest.fixture
def drude(resonant):
    """Drude mirror with kappa0(omega_x) = 1e-3 in the resonant cavity."""
    return MirrorModel(math.sqrt(2000 / math.pi), 1.0, 2.0)


ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_record():
    """Collects one summary line per acceptance criterion."""

    def record(number, title, passed, detail):
        ACCEPTANCE_LINES.append(f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {title} ({detail})")
        print(ACCEPTANCE_LINES[-1])
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
