"""Tests for rotation systems, face tracing and face-local surgery."""
import pytest

from indforest.core.exceptions import (
    ChordUnavailableError,
    EmbeddingError,
    LoopWouldFormError,
    NoChordNeededError,
)
from indforest.models.plane import (
    add_chord,
    cofacial_pairs,
    euler_defects,
    face_at_corner,
    from_rotation,
    identify_in_face,
    insert_edge,
    is_quadrangulation,
    merged_face_count,
    opposite_in_face,
    restrict_to,
    trace_faces,
)


def test_cube_faces(q3):
    """Test face tracing on the cube.

    This test verifies that Q3 has six faces, every one a simple 4-cycle, and
    that every directed edge lies on exactly one face.
    """
    faces = trace_faces(q3)

    assert len(faces) == 6
    assert all(face.length == 4 and face.is_simple for face in faces)
    directed = [edge for face in faces for edge in face.boundary]
    assert len(directed) == len(set(directed)) == 2 * q3.graph.m


def test_cycle_has_two_faces(c4):
    """Test that C4 is a quadrangulation of the sphere with two faces."""
    assert len(trace_faces(c4)) == 2
    assert is_quadrangulation(c4)


def test_k23_is_quadrangulation(k23):
    """Test that the K2,3 fixture has three 4-faces."""
    assert [face.length for face in trace_faces(k23)] == [4, 4, 4]
    assert is_quadrangulation(k23)


def test_grid_is_not_quadrangulation(grid3):
    """Test that the 3 x 3 grid has an outer 8-face."""
    lengths = sorted(face.length for face in trace_faces(grid3))

    assert lengths == [4, 4, 4, 4, 8]
    assert not is_quadrangulation(grid3)


def test_non_planar_rotation_is_rejected():
    """Test that a rotation system failing Euler's formula raises EmbeddingError.

    Giving both degree-3 vertices of K2,3 the same cyclic order produces a
    single face walk, so V - E + F = 0.
    """
    pg = from_rotation([(2, 3, 4), (2, 3, 4), (0, 1), (0, 1), (0, 1)])

    assert euler_defects(pg) == [(5, 6, 1)]
    with pytest.raises(EmbeddingError):
        trace_faces(pg)


def test_rotation_must_match_neighbors():
    """Test that a rotation listing a non-neighbor is rejected."""
    pg = from_rotation([(1,), (0,)])
    with pytest.raises(EmbeddingError):
        type(pg)(pg.graph, ((1,), ()))


def test_face_at_corner_and_opposite(q3):
    """Test the face through a corner and the vertex opposite on it.

    In the cube fixture the rotation at 0 is (4, 1, 3); the corner (1, 3)
    lies on the inner face 0 1 2 3.
    """
    face = face_at_corner(q3, 0, 1, 3)

    assert set(face.vertices) == {0, 1, 2, 3}
    assert opposite_in_face(face, 0) == 2
    assert face_at_corner(q3, 0, 1, 1) is None


def test_cofacial_pairs_of_cube_vertex(q3):
    """Test that every pair of neighbours of a cube vertex is cofacial."""
    assert cofacial_pairs(q3, 0) == [(1, 3), (1, 4), (3, 4)]


def test_add_chord_splits_hexagon(c6):
    """Test adding a chord inside a 6-face.

    This test verifies that the chord joins vertices at distance three, keeps
    the graph bipartite and splits the face into two 4-faces.
    """
    hexagon = c6.faces[0]
    chorded = add_chord(c6, hexagon)
    faces = trace_faces(chorded)

    assert chorded.graph.m == 7
    assert sorted(face.length for face in faces) == [4, 4, 6]
    assert chorded.graph.bipartition is not None


def test_add_chord_on_quadrilateral(c4):
    """Test that a 4-face needs no chord."""
    with pytest.raises(NoChordNeededError):
        add_chord(c4, c4.faces[0])


def test_insert_existing_edge(c4):
    """Test that drawing an existing edge raises ChordUnavailableError."""
    with pytest.raises(ChordUnavailableError):
        insert_edge(c4, 0, 1, 3, 2)


def test_identify_in_face(c4):
    """Test identifying opposite vertices of C4 inside a face.

    The result is a path on three vertices whose single face is traced
    without error.
    """
    child, mapping = identify_in_face(c4, c4.faces[0], [0, 2])

    assert child.n == 3
    assert child.graph.m == 2
    assert mapping[0] == mapping[2]
    assert len(trace_faces(child)) == 1


def test_identify_in_face_rejects_edge(c4):
    """Test that identifying adjacent vertices raises LoopWouldFormError."""
    with pytest.raises(LoopWouldFormError):
        identify_in_face(c4, c4.faces[0], [0, 1])


def test_restrict_and_merge_faces(two_cubes):
    """Test restriction to one component and the merged face count.

    Two cubes trace 12 faces; merging the outer faces leaves 11, so
    V - E + F = 16 - 24 + 11 = 1 + C.
    """
    assert merged_face_count(two_cubes) == 11
    cube, mapping = restrict_to(two_cubes, range(8, 16))

    assert cube.n == 8
    assert mapping[8] == 0
    assert is_quadrangulation(cube)
