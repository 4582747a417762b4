"""
planar_code: binary rotation systems.

Each graph is its vertex count followed by, for every vertex in order, its
neighbors in rotation order (1-based) and a terminating 0. A leading 0 byte
switches the graph to 16-bit little-endian entries. Faces are traced from the
stored order, so a clockwise file yields the mirror embedding with the same
faces.
"""
import logging
from typing import List, Sequence, Tuple

from indforest.core.exceptions import EmbeddingError, InvalidEdgeError, ParseError
from indforest.models.graph import is_bipartite
from indforest.models.plane import PlaneGraph, from_rotation, trace_faces

logger = logging.getLogger(__name__)

HEADER = b">>planar_code<<"
HEADER_PREFIX = b">>planar_code"


def _skip_header(data: bytes) -> int:
    if not data.startswith(HEADER_PREFIX):
        return 0
    end = data.find(b"<<", len(HEADER_PREFIX))
    if end < 0:
        raise ParseError("unterminated planar_code header", 0)
    return end + 2


class _Reader:
    def __init__(self, data: bytes, offset: int):
        self.data = data
        self.offset = offset
        self.wide = False

    def entry(self) -> int:
        width = 2 if self.wide else 1
        if self.offset + width > len(self.data):
            raise ParseError("truncated planar_code record", len(self.data))
        chunk = self.data[self.offset : self.offset + width]
        self.offset += width
        return int.from_bytes(chunk, "little")


def _read_one(data: bytes, offset: int) -> Tuple[PlaneGraph, int]:
    reader = _Reader(data, offset)
    start = offset
    n = reader.entry()
    if n == 0:
        reader.wide = True
        n = reader.entry()
    rotation: List[List[int]] = []
    for v in range(n):
        order = []
        while True:
            at = reader.offset
            u = reader.entry()
            if u == 0:
                break
            if u > n:
                raise ParseError(f"neighbor {u} of vertex {v + 1} exceeds n={n}", at)
            if u == v + 1:
                raise ParseError(f"vertex {u} lists itself as a neighbor", at)
            order.append(u - 1)
        rotation.append(order)
    for v, order in enumerate(rotation):
        for u in order:
            if v not in rotation[u]:
                raise ParseError(f"edge {v + 1}-{u + 1} is listed one way only", start)
    try:
        pg = from_rotation(rotation)
    except (EmbeddingError, InvalidEdgeError) as e:
        raise ParseError(e.message, start) from e
    pg = from_rotation(rotation, is_bipartite(pg.graph))
    trace_faces(pg)
    return pg, reader.offset


def read_planar_code_stream(data: bytes) -> List[PlaneGraph]:
    """
    Decode every graph of a planar_code file.

    Raises:
        ParseError: on a truncated record, an out-of-range neighbor, a loop or
            an asymmetric adjacency
        EmbeddingError: when a rotation system fails Euler's formula
    """
    offset = _skip_header(data)
    graphs = []
    while offset < len(data):
        pg, offset = _read_one(data, offset)
        graphs.append(pg)
    logger.debug(f"Read {len(graphs)} planar_code graphs")
    return graphs


def parse_planar_code(data: bytes) -> PlaneGraph:
    """
    Decode a planar_code record holding exactly one graph.

    Args:
        data: The record, with or without the header

    Returns:
        The embedded graph, with its bipartition attached when it has one

    Raises:
        ParseError: on malformed input or trailing bytes
        EmbeddingError: when the rotation system fails Euler's formula
    """
    offset = _skip_header(data)
    if offset >= len(data):
        raise ParseError("empty planar_code record", offset)
    pg, end = _read_one(data, offset)
    if end != len(data):
        raise ParseError("trailing bytes after planar_code record", end)
    return pg


def _entries(values: Sequence[int], wide: bool) -> bytes:
    width = 2 if wide else 1
    return b"".join(v.to_bytes(width, "little") for v in values)


def emit_planar_code(pg: PlaneGraph, header: bool = False) -> bytes:
    """Encode one plane graph; graphs with more than 255 vertices use 16-bit entries."""
    wide = pg.n > 255
    values = [pg.n]
    for order in pg.rotation:
        values.extend(u + 1 for u in order)
        values.append(0)
    body = (b"\x00" if wide else b"") + _entries(values, wide)
    return (HEADER if header else b"") + body


def write_planar_code_stream(
    graphs: Sequence[PlaneGraph], header: bool = True
) -> bytes:
    return (HEADER if header else b"") + b"".join(emit_planar_code(g) for g in graphs)
