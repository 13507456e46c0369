import pytest

from rlx.enumeration import all_algebras
from rlx.fixtures import pentagon_godel, pentagon_stacked


@pytest.fixture(scope="session")
def E1():
    return pentagon_godel()


@pytest.fixture(scope="session")
def E2():
    return pentagon_stacked()


@pytest.fixture(scope="session")
def corpus5():
    out = []
    for n in range(1, 6):
        out.extend(all_algebras(n))
    return out


@pytest.fixture(scope="session")
def corpus4():
    out = []
    for n in range(1, 5):
        out.extend(all_algebras(n))
    return out


@pytest.fixture(scope="session")
def corpus6():
    return all_algebras(6)
