"""Shared fixtures.

The flagship enumeration and classification are expensive enough to share
across the whole session; everything downstream (acceptance criteria,
orbit properties) reuses them.
"""

from math import prod

import pytest

from orthofrac.catalog import flagship_ambient
from orthofrac.classify import classify
from orthofrac.designs import Design, run_point
from orthofrac.search import SearchProblem, enumerate_orthogonal


def sign_fraction(ambient, factors, sign):
    """The fraction {prod of the given +-1 factors == sign} as a Design."""
    runs = [
        i
        for i in range(ambient.run_count)
        if prod(run_point(ambient, i)[j] for j in factors) == sign
    ]
    return Design.from_runs(ambient, runs)


@pytest.fixture(scope="session")
def flagship():
    return flagship_ambient()


@pytest.fixture(scope="session")
def flagship_result(flagship):
    """(elapsed seconds, designs) for the flagship enumeration."""
    import time

    t0 = time.time()
    designs = enumerate_orthogonal(SearchProblem(flagship, 24, 2))
    return time.time() - t0, designs


@pytest.fixture(scope="session")
def flagship_designs(flagship_result):
    return flagship_result[1]


@pytest.fixture(scope="session")
def flagship_classes(flagship_designs):
    return classify(flagship_designs)
