"""Test configuration for pytest."""
import os
import warnings

import pytest

from indforest.models.graph import build_graph
from indforest.models.plane import from_rotation
from indforest.services.corpus import even_cycle, grid, prism

# Services read their limits from the testing profile
os.environ.setdefault("INDFOREST_ENV", "testing")


def pytest_configure(config):
    """Configure warnings to ignore DeprecationWarnings for specific modules."""
    warnings.filterwarnings("ignore", category=DeprecationWarning, module="networkx.*")
    warnings.filterwarnings("ignore", category=DeprecationWarning, module="ast")
    warnings.filterwarnings(
        "ignore", message=".*PydanticDeprecatedSince20.*", module="pydantic.*"
    )


@pytest.fixture
def c4():
    """The 4-cycle as a plane graph with two faces."""
    return even_cycle(2)


@pytest.fixture
def c6():
    """The 6-cycle as a plane graph."""
    return even_cycle(3)


@pytest.fixture
def q3():
    """The cube Q3, a 3-regular quadrangulation on 8 vertices."""
    return prism(2)


@pytest.fixture
def k23():
    """K2,3 drawn with three 4-faces; vertices 0 and 1 are the degree-3 side."""
    rotation = [(2, 3, 4), (4, 3, 2), (0, 1), (0, 1), (0, 1)]
    return from_rotation(rotation, [0, 0, 1, 1, 1])


@pytest.fixture
def star():
    """The star K1,4 with center 0."""
    return build_graph(5, [(0, i) for i in range(1, 5)])


@pytest.fixture
def path():
    """The path on five vertices."""
    return build_graph(5, [(i, i + 1) for i in range(4)])


@pytest.fixture
def grid3():
    """The 3 x 3 grid."""
    return grid(3, 3)


@pytest.fixture
def two_cubes():
    """Two disjoint cubes, ids 0..7 and 8..15."""
    cube = prism(2)
    rotation = [tuple(cube.rotation[v]) for v in range(8)]
    rotation += [tuple(u + 8 for u in cube.rotation[v]) for v in range(8)]
    colours = list(cube.graph.bipartition) * 2
    return from_rotation(rotation, colours)
