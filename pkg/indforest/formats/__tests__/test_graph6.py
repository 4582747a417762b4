"""Tests for the graph6 codec."""
import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from indforest.core.exceptions import ParseError
from indforest.formats.graph6 import (
    emit_graph6,
    parse_graph6,
    read_graph6_stream,
    write_graph6_stream,
)
from indforest.models.graph import build_graph


def test_parse_cycle():
    """Test that "Cr" decodes to the 4-cycle 0-1-3-2 with its bipartition."""
    graph = parse_graph6("Cr")

    assert graph.n == 4
    assert graph.edges() == [(0, 1), (0, 2), (1, 3), (2, 3)]
    assert graph.bipartition is not None


def test_parse_complete_graph():
    """Test that "C~" decodes to K4, which has no bipartition."""
    graph = parse_graph6(b"C~\n")

    assert graph.m == 6
    assert graph.bipartition is None


def test_parse_tiny_graphs():
    """Test the empty and single-vertex records."""
    assert parse_graph6("?").n == 0
    assert parse_graph6("@").n == 1


def test_header_is_optional():
    """Test that the >>graph6<< header is accepted and emitted on request."""
    graph = parse_graph6(b">>graph6<<Cr")

    assert graph.m == 4
    assert emit_graph6(graph, header=True) == b">>graph6<<Cr"
    assert emit_graph6(graph) == b"Cr"


@st.composite
def graphs(draw):
    """Random simple graphs on up to 70 vertices."""
    n = draw(st.integers(min_value=0, max_value=70))
    if n < 2:
        return build_graph(n, [])
    pairs = st.tuples(
        st.integers(min_value=0, max_value=n - 1),
        st.integers(min_value=0, max_value=n - 1),
    ).filter(lambda p: p[0] != p[1])
    return build_graph(n, draw(st.lists(pairs, max_size=3 * n)))


@given(graphs())
@settings(max_examples=60, deadline=None)
def test_matches_networkx(graph):
    """Test the encoder and decoder against networkx.

    Vertex counts above 62 exercise the four-byte size prefix.
    """
    expected = nx.to_graph6_bytes(graph.to_networkx(), header=False)

    assert emit_graph6(graph) + b"\n" == expected
    decoded = parse_graph6(expected)
    assert decoded.n == graph.n
    assert decoded.edges() == graph.edges()
    oracle = nx.from_graph6_bytes(expected.rstrip(b"\n"))
    assert sorted(tuple(sorted(e)) for e in oracle.edges()) == graph.edges()


@pytest.mark.parametrize(
    "record, offset",
    [
        (b"C", 1),
        (b"C ", 1),
        (b"Crr", 2),
        (b"Bx", 1),
        (b"~?", 2),
        (b">>graph6<<C", 11),
    ],
)
def test_malformed_records(record, offset):
    """Test that malformed records raise ParseError with the byte offset."""
    with pytest.raises(ParseError) as excinfo:
        parse_graph6(record)

    assert excinfo.value.offset == offset


def test_non_ascii_input():
    """Test that a non-ASCII character is reported at its position."""
    with pytest.raises(ParseError) as excinfo:
        parse_graph6("Cé")

    assert excinfo.value.offset == 1


def test_stream():
    """Test reading a multi-record file with blank lines."""
    graphs_read = read_graph6_stream(b"Cr\n\nC~\n")

    assert [g.m for g in graphs_read] == [4, 6]
    assert write_graph6_stream(graphs_read) == b"Cr\nC~\n"
    assert write_graph6_stream(graphs_read, header=True) == b">>graph6<<Cr\nC~\n"


def test_stream_error_offset_is_absolute():
    """Test that an error in the second record reports its file offset."""
    with pytest.raises(ParseError) as excinfo:
        read_graph6_stream(b"Cr\nC\n")

    assert excinfo.value.offset == 4
