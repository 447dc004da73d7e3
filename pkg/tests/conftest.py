import os
import sys
from functools import lru_cache

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile(
    "default",
    max_examples=40,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@lru_cache(maxsize=None)
def irrep(name: str, weight: tuple, depth=None):
    from artifact import build_irrep

    return build_irrep(name, list(weight), max_depth=depth)


@pytest.fixture(scope="session")
def rep_cache():
    return irrep


@pytest.fixture(scope="session")
def a1_fund():
    return irrep("A1", (1,))


@pytest.fixture(scope="session")
def a1_adj():
    return irrep("A1", (2,))


@pytest.fixture(scope="session")
def a2_fund():
    return irrep("A2", (1, 0))


@pytest.fixture(scope="session")
def a2_adj():
    return irrep("A2", (1, 1))
