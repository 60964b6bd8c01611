import pytest

from kegraph.config import get_search_limits
from kegraph.errors import WorkBudget
from kegraph.gallery import gallery_fixture
from kegraph.generators import complete, cycle, path, star
from kegraph.graph import Graph

from oracles import atlas


@pytest.fixture(scope="session")
def small_atlas():
    """Every graph on at most six vertices, one per isomorphism class."""
    return atlas(6)


@pytest.fixture
def c5():
    return cycle(5)


@pytest.fixture
def p3():
    return path(3)


@pytest.fixture
def k4():
    return complete(4)


@pytest.fixture
def claw():
    return star(3)


@pytest.fixture
def k4_minus_edge():
    """K4 without 2-3: alpha 2, mu 2, core {2, 3}, ker empty."""
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


@pytest.fixture
def paw():
    return gallery_fixture("paw").graph


@pytest.fixture
def budget():
    return WorkBudget(5_000_000)


@pytest.fixture
def limits():
    return get_search_limits("standard")
