import random

import pytest
from hypothesis import settings

from quadpencil.poly import Poly

settings.register_profile("exact", deadline=None)
settings.load_profile("exact")


@pytest.fixture
def rng():
    return random.Random(12345)


def P(*coeffs):
    """Poly from coefficients written high degree first, as usually written."""
    return Poly(list(reversed(coeffs)))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
