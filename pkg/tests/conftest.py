import pytest

from binact.group import PermGroup


@pytest.fixture(scope="session")
def S3():
    return PermGroup.symmetric(3)


@pytest.fixture(scope="session")
def S4():
    return PermGroup.symmetric(4)


@pytest.fixture(scope="session")
def S5():
    return PermGroup.symmetric(5)


@pytest.fixture(scope="session")
def S6():
    return PermGroup.symmetric(6)


@pytest.fixture(scope="session")
def A4():
    return PermGroup.alternating(4)


@pytest.fixture(scope="session")
def A5():
    return PermGroup.alternating(5)


@pytest.fixture(scope="session")
def A6():
    return PermGroup.alternating(6)


@pytest.fixture(scope="session")
def A9():
    return PermGroup.alternating(9)
