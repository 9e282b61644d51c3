import pytest

from cartankit.catalog import bundled_fixtures, load_algebra


@pytest.fixture(scope="session")
def catalog():
    """Every bundled fixture algebra, loaded once per session."""
    return {name: load_algebra(path) for name, path in bundled_fixtures().items()}


@pytest.fixture(scope="session")
def sl2(catalog):
    return catalog["sl2"]


@pytest.fixture(scope="session")
def h3(catalog):
    return catalog["heisenberg"]


@pytest.fixture(scope="session")
def aff1(catalog):
    return catalog["aff1"]


@pytest.fixture(scope="session")
def e2(catalog):
    return catalog["e2"]


@pytest.fixture(scope="session")
def oscillator(catalog):
    return catalog["oscillator"]


@pytest.fixture(scope="session")
def gl2(catalog):
    return catalog["gl2"]


@pytest.fixture(scope="session")
def sl2xr2(catalog):
    return catalog["sl2xR2"]


@pytest.fixture(scope="session")
def sl2xheis(catalog):
    return catalog["sl2xheis"]
