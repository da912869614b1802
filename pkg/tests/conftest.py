import pytest

from clusterchar.quiver import affine_a2_quiver, kronecker_quiver


@pytest.fixture
def kronecker():
    return kronecker_quiver()


@pytest.fixture
def affine_a2():
    return affine_a2_quiver()
