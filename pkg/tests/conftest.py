import pytest

from core.seifert import KnotCatalog

CATALOG_NAMES = ["unknot", "trefoil", "figure-eight", "T2_5", "T3_4"]


@pytest.fixture(scope="session")
def catalog():
    return KnotCatalog.builtin()


@pytest.fixture(scope="session")
def trefoil(catalog):
    return catalog.seifert("trefoil")


@pytest.fixture(scope="session")
def figure_eight(catalog):
    return catalog.seifert("figure-eight")


@pytest.fixture(scope="session")
def unknot(catalog):
    return catalog.seifert("unknot")
