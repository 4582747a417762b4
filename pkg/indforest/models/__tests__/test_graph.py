"""Tests for the graph model and its vertex surgeries."""
import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from indforest.core.exceptions import InvalidEdgeError, LoopWouldFormError
from indforest.models.graph import (
    add_edge,
    build_graph,
    delete_vertices,
    find_cycle,
    identify,
    induces_forest,
    is_bipartite,
)


@st.composite
def graphs(draw, max_n=9):
    """Random simple graphs as (n, edges)."""
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return n, edges


def test_build_graph_merges_repeated_edges():
    """Test that repeated edges are merged.

    This test verifies that listing an edge twice, in either orientation,
    yields a single undirected edge.
    """
    graph = build_graph(3, [(0, 1), (1, 0), (1, 2)])

    assert graph.m == 2
    assert graph.edges() == [(0, 1), (1, 2)]
    assert graph.degree(1) == 2


def test_build_graph_rejects_loops_and_bad_ids():
    """Test that loops and out-of-range endpoints raise InvalidEdgeError."""
    with pytest.raises(InvalidEdgeError):
        build_graph(3, [(1, 1)])
    with pytest.raises(InvalidEdgeError):
        build_graph(3, [(0, 3)])


def test_build_graph_checks_bipartition():
    """Test that an improper colouring is rejected."""
    with pytest.raises(InvalidEdgeError):
        build_graph(2, [(0, 1)], bipartition=[0, 0])


def test_delete_vertices_compacts_ids(path):
    """Test deleting a vertex.

    This test verifies that survivors are renumbered in order and that only
    the edges between survivors remain.
    """
    child, mapping = delete_vertices(path, [2])

    assert child.n == 4
    assert mapping == {0: 0, 1: 1, 3: 2, 4: 3}
    assert child.edges() == [(0, 1), (2, 3)]


def test_identify_merges_parallel_edges(c4):
    """Test identifying opposite vertices of C4.

    This test verifies that the two edges to each merged neighbour collapse
    into one, leaving a path on three vertices.
    """
    child, mapping = identify(c4.graph, [[0, 2]])

    assert child.n == 3
    assert child.m == 2
    assert mapping[0] == mapping[2]


def test_identify_rejects_adjacent_group(c4):
    """Test that identifying an edge raises LoopWouldFormError."""
    with pytest.raises(LoopWouldFormError):
        identify(c4.graph, [[0, 1]])


def test_add_edge_is_idempotent(path):
    """Test that adding an existing edge returns the same graph."""
    assert add_edge(path, 0, 1) is path
    assert add_edge(path, 0, 4).has_edge(4, 0)


def test_vertices_with_degree(path, star):
    """Test the degree-range views."""
    assert path.vertices_with_degree(hi=1) == [0, 4]
    assert path.vertices_with_degree(2, 2) == [1, 2, 3]
    assert star.vertices_with_degree(lo=4) == [0]


@given(graphs())
@settings(max_examples=200)
def test_induces_forest_matches_networkx(data):
    """Test induces_forest against networkx on the whole vertex set."""
    n, edges = data
    graph = build_graph(n, edges)
    expected = nx.is_forest(graph.to_networkx()) if n else True

    assert induces_forest(graph, range(n)) == expected
    assert (find_cycle(graph, range(n)) is None) == expected


@given(graphs())
@settings(max_examples=200)
def test_is_bipartite_matches_networkx(data):
    """Test the breadth-first two-colouring against networkx."""
    n, edges = data
    graph = build_graph(n, edges)
    colouring = is_bipartite(graph)

    assert (colouring is not None) == nx.is_bipartite(graph.to_networkx())
    if colouring is not None:
        assert all(colouring[u] != colouring[v] for u, v in graph.edges())


def test_components_of_two_cubes(two_cubes):
    """Test that two disjoint cubes form two components of eight vertices."""
    components = two_cubes.graph.components()

    assert [len(c) for c in components] == [8, 8]
    assert not two_cubes.graph.is_connected()
