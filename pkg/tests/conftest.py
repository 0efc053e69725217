import numpy as np
import pytest

from vline_sampling import GaussianComponent, Geometry, Phantom

# filled by test_acceptance; printed once at the end of the run
ACCEPTANCE = {}


@pytest.fixture(scope="session")
def blobs():
    """Three-blob phantom used across the suite (all reaches inside the unit disk)."""
    return Phantom((
        GaussianComponent((0.2, 0.1), 0.125, 1.0),
        GaussianComponent((-0.3, 0.25), 0.08, 0.7),
        GaussianComponent((0.05, -0.5), 0.06, 1.3),
    ))


@pytest.fixture(scope="session")
def blob():
    return Phantom.single((0.2, 0.1), 0.125)


@pytest.fixture(scope="session")
def geom():
    from fractions import Fraction
    return Geometry(Fraction(3, 2), 1, 5, Fraction(5, 6))


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"criterion {key:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
