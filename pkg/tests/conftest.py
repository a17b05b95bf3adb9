import os

import pytest
from hypothesis import HealthCheck, settings

from brauerkit import load_fixture

settings.register_profile("default", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=150, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

FIXTURE_DIR = os.path.join(os.path.dirname(__file__), "..", "src", "brauerkit", "fixtures")


@pytest.fixture(scope="session")
def fx():
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = load_fixture(name)
        return cache[name]

    return get


@pytest.fixture
def fixture_path():
    return lambda name: os.path.join(FIXTURE_DIR, f"{name}.txt")
