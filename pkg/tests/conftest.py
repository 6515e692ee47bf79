import cmath

import mpmath
import pytest

ACCEPTANCE_LINES: list[str] = []


def mp_theta(z: complex, tau: complex) -> complex:
    """Independent oracle: theta(z, tau) = jtheta(3, pi z, exp(i pi tau))."""
    mpmath.mp.dps = 30
    q = mpmath.exp(1j * mpmath.pi * mpmath.mpc(tau))
    return complex(mpmath.jtheta(3, mpmath.pi * mpmath.mpc(z), q))


@pytest.fixture
def oracle():
    return mp_theta


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
