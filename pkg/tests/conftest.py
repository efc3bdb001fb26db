import pytest

from kernel import direct_product
from tests.helpers import family_group, group_of


@pytest.fixture(scope="session")
def c2():
    return family_group("Cyclic", n=2)


@pytest.fixture(scope="session")
def c4():
    return family_group("Cyclic", n=4)


@pytest.fixture(scope="session")
def c2xc2():
    return family_group("ElemAbelianPower", n=2, m=2)


@pytest.fixture(scope="session")
def d8():
    return family_group("Dihedral", n=8)


@pytest.fixture(scope="session")
def d16():
    return family_group("Dihedral", n=16)


@pytest.fixture(scope="session")
def d32():
    return family_group("Dihedral", n=32)


@pytest.fixture(scope="session")
def q8():
    return family_group("Q8")


@pytest.fixture(scope="session")
def q8xc2(q8, c2):
    return direct_product(q8, c2, label="Q8xC2")


@pytest.fixture(scope="session")
def m3_21():
    return family_group("MpMN", p=3, m=2, n=1)


@pytest.fixture(scope="session")
def m3_111():
    return family_group("MpMN1", p=3, m=1, n=1)


@pytest.fixture(scope="session")
def s3():
    return group_of("gens a,b; rels a^3=b^2=1, a^b=a^-1;", label="S3")
