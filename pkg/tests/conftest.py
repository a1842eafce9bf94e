import pytest

from srgddg import galois, graphcore


@pytest.fixture(scope="session")
def petersen():
    return graphcore.petersen()


@pytest.fixture(scope="session")
def t6():
    return graphcore.triangular(6)


@pytest.fixture(scope="session")
def grid66():
    return graphcore.grid(6, 6)


@pytest.fixture(scope="session")
def sp42():
    """The unique SRG(15,8,4,4) as the symplectic non-orthogonality graph."""
    return galois.symplectic_complement(2, galois.fieldspec(2, 1))


@pytest.fixture(scope="session")
def sp43():
    """SRG(40,27,18,18)."""
    return galois.symplectic_complement(2, galois.fieldspec(3, 1))


@pytest.fixture(scope="session")
def sp62():
    """SRG(63,32,16,16)."""
    return galois.symplectic_complement(3, galois.fieldspec(2, 1))
