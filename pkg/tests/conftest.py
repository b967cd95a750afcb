import time

import pytest

from solvlab.checks import CHECK_TOKENS, run_catalog_checks
from solvlab.families import CatalogEntry, FamilySpec


def _entry(family, *params):
    return CatalogEntry.from_spec(FamilySpec(family, tuple(params)))


@pytest.fixture(scope="session")
def a5():
    return _entry("alternating", 5).group


@pytest.fixture(scope="session")
def s4():
    return _entry("symmetric", 4).group


@pytest.fixture(scope="session")
def sl2_5():
    return _entry("sl2", 5).group


@pytest.fixture(scope="session")
def psl2_7():
    return _entry("psl2", 7).group


@pytest.fixture(scope="session")
def psl2_8():
    return _entry("psl2", 8).group


@pytest.fixture(scope="session")
def psl2_13():
    return _entry("psl2", 13).group


@pytest.fixture(scope="session")
def catalog_sweep():
    """One full-check sweep of the default catalog, shared by the acceptance
    tests; roughly a minute of compute.  Yields (items, counterexamples,
    elapsed seconds) so the budget can be asserted too."""
    start = time.monotonic()
    items, counterexamples = run_catalog_checks(1200, CHECK_TOKENS)
    return items, counterexamples, time.monotonic() - start
