import pytest

from rootforge import affine, cover, induce, roots


@pytest.fixture(scope="session")
def h3_system():
    return roots.catalog_system("H3")


@pytest.fixture(scope="session")
def pin_h3():
    return cover.pin_group_of("H3")


@pytest.fixture(scope="session")
def spin_h3(pin_h3):
    return cover.spin_group(pin_h3)


@pytest.fixture(scope="session")
def e8_report():
    return induce.e8_from_h3()


@pytest.fixture(scope="session")
def induced_4d():
    out = {}
    for name in ("A3", "B3", "H3"):
        out[name] = induce.induce_4d(roots.catalog_system(name))
    return out


@pytest.fixture(scope="session")
def onion_c60():
    return affine.fullerene_onion("C60", 2)


@pytest.fixture(scope="session")
def onion_c80():
    return affine.fullerene_onion("C80", 2)
