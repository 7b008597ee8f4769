import random

import pytest

from dbgnc.bgn import bgn_keygen
from dbgnc.ec import CurveParams, generate_parameters, sample_point_of_order_n

_acceptance = []


@pytest.fixture(scope="session")
def gf5():
    # y^2 = x^3 + 1 over GF(5): 6 points, n = 2*3, cofactor 1.
    return CurveParams(pp=5, n=6, cofactor=1, q1=2, q2=3)


@pytest.fixture(scope="session")
def toy():
    """q1 = 11, q2 = 13, pp = 857."""
    return generate_parameters(10)


@pytest.fixture(scope="session")
def toy_keys(toy):
    return bgn_keygen(toy, 12, random.Random(11))


@pytest.fixture(scope="session")
def medium():
    """q1, q2 just above 2^64."""
    return generate_parameters(1 << 64)


@pytest.fixture(scope="session")
def medium_keys(medium):
    return bgn_keygen(medium, 100, random.Random(64))


@pytest.fixture(scope="session")
def digit_params():
    """q1 = 101, q2 = 103, so T = 100 fits below q2."""
    return generate_parameters(100)


@pytest.fixture(scope="session")
def digit_keys(digit_params):
    return bgn_keygen(digit_params, 100, random.Random(100))


@pytest.fixture(scope="session")
def wide():
    """A curve whose order-n points comfortably exceed 10^6."""
    params = generate_parameters(1 << 40)
    g = sample_point_of_order_n(params, random.Random(40))
    return params, g


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
