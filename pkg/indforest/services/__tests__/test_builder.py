"""Tests for the constructive forest builder."""
from indforest.services.builder import build_forest
from indforest.services.corpus import generate_corpus, pseudo_double_wheel


def test_small_graph_is_solved_exactly(q3):
    """Test that a graph below the exact threshold is solved directly."""
    result = build_forest(q3)

    assert result.rules == ["exact"]
    assert result.certificate.size == 5
    assert result.meets_bound
    assert not result.fallback_used
    assert result.note is None


def test_two_cubes_by_reduction(two_cubes):
    """Test the builder on two disjoint cubes with a small exact threshold.

    The components are built separately; in each cube an R-pair step leaves a
    six-vertex child solved exactly, and the lift gains one vertex, giving
    5 + 5 = 10 = ceil(67/7).
    """
    result = build_forest(two_cubes, exact_max_n=6)

    assert result.rules[0] == "components"
    assert result.rules.count("R-pair") == 2
    assert result.certificate.size == 10
    assert result.certificate.verify(two_cubes.graph)
    assert result.meets_bound
    assert result.lift_failures == 0


def test_chord_rule_on_hexagon(c6):
    """Test that long faces are chorded before any reduction.

    Chords only add edges, so the forest found in the chorded graph is also
    a forest of C6.
    """
    result = build_forest(c6, exact_max_n=4)

    assert "chord" in result.rules
    assert result.certificate.verify(c6.graph)


def test_wheel_build_verifies():
    """Test that the builder output always verifies, whatever rules fire."""
    pg = pseudo_double_wheel(5)
    result = build_forest(pg, exact_max_n=6)

    assert result.certificate.verify(pg.graph)
    assert result.certificate.bound_target == 8
    assert result.rules


def test_bound_met_on_larger_quadrangulations():
    """Test the builder on random quadrangulations with 21 to 60 vertices.

    This test verifies that every certificate is a forest of its graph and
    that the bound is met on nearly all of them.
    """
    entries = generate_corpus(
        "random_quadrangulations_by_face_expansion", 40, seed=1, min_n=21, max_n=60
    )
    results = [build_forest(entry.plane) for entry in entries]

    assert all(21 <= entry.graph.n <= 60 for entry in entries)
    assert all(
        result.certificate.verify(entry.graph)
        for entry, result in zip(entries, results)
    )
    met = sum(result.meets_bound for result in results)
    assert met >= 0.95 * len(results)
