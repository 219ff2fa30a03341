import pytest

from perconet import generators

from builders import hub_graph


@pytest.fixture(scope="session")
def paper_scale_hub_graph():
    """(n=3081, m=101105) graph whose hub has in 2571 / out 2541 / total 5112."""
    return hub_graph()


@pytest.fixture(scope="session")
def paper_scale_uniform_graph():
    return generators.uniform_random(3081, 101105, seed=7)
