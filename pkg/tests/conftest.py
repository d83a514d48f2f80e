import pytest

from soficlab import bundled_shift

_NAMES = ("full2", "golden", "even", "twopoint", "period2", "zeros",
          "mixnot_2", "mixnot_3", "mixnot_4", "mixnot_5")


@pytest.fixture(scope="session")
def shifts():
    """All bundled shifts, loaded once."""
    return {name: bundled_shift(name) for name in _NAMES}


@pytest.fixture(scope="session")
def full2(shifts):
    return shifts["full2"]


@pytest.fixture(scope="session")
def golden(shifts):
    return shifts["golden"]


@pytest.fixture(scope="session")
def even(shifts):
    return shifts["even"]


@pytest.fixture(scope="session")
def twopoint(shifts):
    return shifts["twopoint"]


@pytest.fixture(scope="session")
def period2(shifts):
    return shifts["period2"]


@pytest.fixture(scope="session")
def zeros(shifts):
    return shifts["zeros"]
