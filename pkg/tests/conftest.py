from itertools import product

import pytest
from hypothesis import HealthCheck, settings

from pervmirror import corpus
from pervmirror.polytope import from_vertices

settings.register_profile("default", deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def quintic_dual():
    return corpus.quintic_dual()


@pytest.fixture(scope="session")
def quintic():
    return corpus.quintic()


@pytest.fixture(scope="session")
def cube():
    return corpus.cube4()


@pytest.fixture(scope="session")
def cross():
    return corpus.cross4()


@pytest.fixture(scope="session")
def triangle_square():
    tri = [(-1, -1), (2, -1), (-1, 2)]
    sq = list(product((-1, 1), repeat=2))
    return from_vertices(corpus.product_vertices(tri, sq))


@pytest.fixture(scope="session")
def full_corpus():
    return corpus.corpus()


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance")
        for line in RESULTS:
            terminalreporter.write_line(line)
