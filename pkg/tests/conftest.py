import pytest

from gddx import data, workflow


@pytest.fixture(scope="session")
def rulebase():
    return data.baseline_rules()


@pytest.fixture(scope="session")
def catalogs():
    return data.builtin_catalogs()


def fixture_construction(name):
    return workflow.load_construction(data.fixture_text(name))


@pytest.fixture(scope="session")
def ninepoint():
    return fixture_construction("ninepoint")


@pytest.fixture(scope="session")
def rt_median():
    return fixture_construction("rt_median")


@pytest.fixture(scope="session")
def midline():
    return fixture_construction("midline")


@pytest.fixture(scope="session")
def scalene():
    return fixture_construction("scalene")
