import pytest
from hypothesis import HealthCheck, settings

from acimpedance import load_example

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def examples():
    names = ("nontrivial", "solutions", "complex_omega", "non_pos_w", "minus_lambda", "resistors")
    return {name: load_example(name) for name in names}
