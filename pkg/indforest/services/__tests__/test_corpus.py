"""Tests for the corpus families and the face-expansion generator."""
import pytest

from indforest.models.graph import is_bipartite
from indforest.models.plane import euler_defects, is_quadrangulation
from indforest.services.corpus import (
    FAMILIES,
    expand_cube,
    expand_diagonal,
    generate_corpus,
)
from indforest.services.solver import a_exact


@pytest.mark.parametrize("family", sorted(FAMILIES))
def test_every_family_is_embedded(family):
    """Test that every family yields attested, bipartite plane graphs."""
    entries = generate_corpus(family, 2, seed=3)

    assert entries
    for entry in entries:
        assert entry.source == "generator"
        assert entry.attested_planar
        assert not euler_defects(entry.plane)
        assert is_bipartite(entry.graph) is not None


def test_cube_family_starts_with_cube():
    """Test that the first cube family entry is Q3."""
    (cube,) = generate_corpus("cube_family", 1)

    assert (cube.graph.n, cube.graph.m) == (8, 12)
    assert is_quadrangulation(cube.plane)


def test_double_cube_is_tight():
    """Test two cubes joined by a matching: 16 vertices and a = 10 = bound."""
    entry = generate_corpus("double_cube_matching", 1)[0]
    certificate = a_exact(entry.graph)

    assert entry.graph.n == 16
    assert certificate.size == certificate.bound_target == 10


def test_grid_family():
    """Test that the grids family lists every r x c with 2 <= r <= c <= size."""
    entries = generate_corpus("grids", 3)

    assert [e.id for e in entries] == ["grid-2x2", "grid-2x3", "grid-3x3"]
    assert entries[-1].graph.n == 9


def test_random_quadrangulations_are_seeded():
    """Test the seeded generator.

    Every graph is a quadrangulation with minimum degree at least 2 and a
    vertex count inside the requested range, and reruns are identical.
    """
    first = generate_corpus(
        "random_quadrangulations_by_face_expansion", 5, seed=7, min_n=8, max_n=14
    )
    second = generate_corpus(
        "random_quadrangulations_by_face_expansion", 5, seed=7, min_n=8, max_n=14
    )

    assert [e.plane.rotation for e in first] == [e.plane.rotation for e in second]
    for entry in first:
        assert 8 <= entry.graph.n <= 14
        assert is_quadrangulation(entry.plane)
        assert min(entry.graph.degree(v) for v in range(entry.graph.n)) >= 2


def test_expansions_keep_quadrangulation(q3):
    """Test both face expansions on a cube face."""
    face = q3.faces[0]
    diagonal = expand_diagonal(q3, face)
    nested = expand_cube(q3, face)

    assert diagonal.n == 9 and diagonal.graph.degree(8) == 2
    assert nested.n == 12 and nested.graph.m == 20
    assert is_quadrangulation(diagonal) and is_quadrangulation(nested)
    assert nested.graph.bipartition is not None


def test_bad_arguments():
    """Test that unknown families and sizes below 1 raise ValueError."""
    with pytest.raises(ValueError):
        generate_corpus("no_such_family", 1)
    with pytest.raises(ValueError):
        generate_corpus("grids", 0)
