import pytest

from aggroupoids import all_congruences, compose
from aggroupoids.samples import (
    collapsing_strong_semilattice,
    inverse_monoid4,
    subtraction_mod,
)


@pytest.fixture(scope="session")
def f1():
    return inverse_monoid4()


@pytest.fixture(scope="session")
def f2():
    return subtraction_mod(3)


@pytest.fixture(scope="session")
def collapse():
    return compose(collapsing_strong_semilattice())


@pytest.fixture(scope="session")
def f1_report(f1):
    return all_congruences(f1)
