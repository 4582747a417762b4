"""Tests for the planar_code codec."""
import pytest

from indforest.core.exceptions import EmbeddingError, ParseError
from indforest.formats.planar_code import (
    emit_planar_code,
    parse_planar_code,
    read_planar_code_stream,
    write_planar_code_stream,
)

# C4 with rotation 0: (1, 3), 1: (2, 0), 2: (3, 1), 3: (0, 2), 1-based
C4_VALUES = [4, 2, 4, 0, 3, 1, 0, 4, 2, 0, 1, 3, 0]


def test_cube_keeps_its_faces(q3):
    """Test that an emitted cube decodes to the same rotation and six 4-faces."""
    pg = parse_planar_code(emit_planar_code(q3))

    assert pg.rotation == q3.rotation
    assert sorted(f.length for f in pg.faces) == [4] * 6
    assert pg.graph.bipartition is not None


def test_stream_with_header(q3, c4):
    """Test a headered file holding two graphs."""
    data = write_planar_code_stream([q3, c4])

    assert data.startswith(b">>planar_code<<")
    assert [pg.n for pg in read_planar_code_stream(data)] == [8, 4]


def test_empty_stream():
    """Test that an empty file, with or without a header, is an empty corpus."""
    assert read_planar_code_stream(b"") == []
    assert read_planar_code_stream(b">>planar_code le<<") == []


def test_wide_entries(c4):
    """Test the 16-bit mode announced by a leading zero byte."""
    data = b"\x00" + b"".join(v.to_bytes(2, "little") for v in C4_VALUES)

    assert parse_planar_code(data).rotation == c4.rotation
    assert parse_planar_code(bytes(C4_VALUES)).rotation == c4.rotation


def test_euler_failure():
    """Test that a rotation of K2,3 with too few faces is rejected."""
    values = [5, 3, 4, 5, 0, 3, 4, 5, 0, 1, 2, 0, 1, 2, 0, 1, 2, 0]

    with pytest.raises(EmbeddingError):
        parse_planar_code(bytes(values))


@pytest.mark.parametrize(
    "data, offset",
    [
        (bytes([2, 3, 0, 1, 0]), 1),
        (bytes([2, 2, 0, 1]), 4),
        (bytes([2, 2, 0, 0]), 0),
        (bytes([1, 1, 0]), 1),
        (bytes([2, 2, 1, 0, 1, 0]), 2),
        (bytes(C4_VALUES) + b"\x04", 13),
        (b">>planar_code", 0),
    ],
)
def test_malformed_records(data, offset):
    """Test out-of-range, truncated, one-way, looped, trailing and header errors."""
    with pytest.raises(ParseError) as excinfo:
        parse_planar_code(data)

    assert excinfo.value.offset == offset
