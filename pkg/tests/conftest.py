import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "ci",
    derandomize=True,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
    deadline=None,
)
settings.load_profile("ci")

from nilrep import GF, QQ
from nilrep import catalog


@pytest.fixture(scope="session")
def heis():
    return catalog.heisenberg(QQ)


@pytest.fixture(scope="session")
def heis_f2():
    return catalog.heisenberg(GF(2))


@pytest.fixture(scope="session")
def u4():
    return catalog.upper_triangular(4, QQ)


@pytest.fixture(scope="session")
def f13():
    return catalog.filiform_f(13)
