"""graph6: printable 6-bit packed upper-triangular adjacency."""
from typing import List, Tuple, Union

from indforest.core.exceptions import ParseError
from indforest.models.graph import Graph, build_graph, is_bipartite

HEADER = b">>graph6<<"
BIAS = 63
SMALL_N = 62
MEDIUM_N = 258047


def _strip_header(data: bytes) -> Tuple[bytes, int]:
    if data.startswith(HEADER):
        return data[len(HEADER) :], len(HEADER)
    return data, 0


def _as_bytes(data: Union[bytes, str]) -> bytes:
    if not isinstance(data, str):
        return bytes(data)
    try:
        return data.encode("ascii")
    except UnicodeEncodeError as e:
        raise ParseError("non-ASCII character in graph6 input", e.start) from e


def _size(data: bytes, base: int) -> Tuple[int, int]:
    """Decode N(n); returns n and the number of bytes consumed."""
    if not data:
        raise ParseError("empty graph6 record", base)
    if data[0] != 126:
        return data[0] - BIAS, 1
    if len(data) >= 2 and data[1] == 126:
        width, start = 6, 2
    else:
        width, start = 3, 1
    if len(data) < start + width:
        raise ParseError("truncated vertex count", base + len(data))
    n = 0
    for byte in data[start : start + width]:
        n = (n << 6) | (byte - BIAS)
    return n, start + width


def parse_graph6(data: Union[bytes, str], offset: int = 0) -> Graph:
    """
    Decode one graph6 record.

    Args:
        data: The record, with or without the >>graph6<< header and a
            trailing newline
        offset: Position of the record in its file, added to error offsets

    Returns:
        The decoded graph, with its bipartition attached when it has one

    Raises:
        ParseError: on a bad character, a truncated or overlong record, or
            nonzero padding bits
    """
    raw = _as_bytes(data).rstrip(b"\r\n")
    body, base = _strip_header(raw)
    base += offset
    for i, byte in enumerate(body):
        if not BIAS <= byte <= 126:
            raise ParseError(f"byte {byte!r} outside the graph6 range", base + i)
    n, used = _size(body, base)
    pairs = n * (n - 1) // 2
    expected = (pairs + 5) // 6
    packed = body[used:]
    if len(packed) < expected:
        raise ParseError("truncated adjacency bits", base + len(body))
    if len(packed) > expected:
        raise ParseError("trailing bytes after adjacency bits", base + used + expected)

    bits = 0
    for byte in packed:
        bits = (bits << 6) | (byte - BIAS)
    padding = expected * 6 - pairs
    if bits & ((1 << padding) - 1):
        raise ParseError("nonzero padding bits", base + used + expected - 1)
    bits >>= padding

    edges = []
    position = pairs - 1
    for j in range(1, n):
        for i in range(j):
            if bits >> position & 1:
                edges.append((i, j))
            position -= 1
    graph = build_graph(n, edges)
    return build_graph(n, edges, is_bipartite(graph))


def _encode_size(n: int) -> bytes:
    if n <= SMALL_N:
        return bytes([n + BIAS])
    if n <= MEDIUM_N:
        return bytes([126] + [(n >> s & 63) + BIAS for s in (12, 6, 0)])
    return bytes([126, 126] + [(n >> s & 63) + BIAS for s in (30, 24, 18, 12, 6, 0)])


def emit_graph6(graph: Graph, header: bool = False) -> bytes:
    """Encode a graph as one graph6 record without the trailing newline."""
    bits: List[int] = [
        1 if graph.has_edge(i, j) else 0 for j in range(1, graph.n) for i in range(j)
    ]
    bits.extend([0] * (-len(bits) % 6))
    packed = bytes(
        BIAS + int("".join(map(str, bits[k : k + 6])), 2)
        for k in range(0, len(bits), 6)
    )
    return (HEADER if header else b"") + _encode_size(graph.n) + packed


def read_graph6_stream(data: Union[bytes, str]) -> List[Graph]:
    """Decode a newline-separated graph6 file; blank lines are skipped."""
    raw = _as_bytes(data)
    graphs = []
    offset = 0
    for line in raw.split(b"\n"):
        record = line.rstrip(b"\r")
        if record:
            graphs.append(parse_graph6(record, offset))
        offset += len(line) + 1
    return graphs


def write_graph6_stream(graphs: List[Graph], header: bool = False) -> bytes:
    lines = [emit_graph6(g, header=header and i == 0) for i, g in enumerate(graphs)]
    return b"".join(line + b"\n" for line in lines)
