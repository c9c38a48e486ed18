import pytest

from cutkit import get_engine


@pytest.fixture(scope="session")
def dinic():
    return get_engine("dinic")


@pytest.fixture(scope="session")
def scipy_eng():
    return get_engine("scipy")


@pytest.fixture(scope="session", params=["dinic", "scipy"])
def any_engine(request):
    return get_engine(request.param)
