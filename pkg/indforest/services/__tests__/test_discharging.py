"""Tests for the charge ledger, the transfer rules and the audit."""
import random

from hypothesis import given, settings
from hypothesis import strategies as st

from indforest.models.catalog import ConfigHit
from indforest.models.graph import build_graph
from indforest.models.plane import from_rotation
from indforest.services.corpus import pseudo_double_wheel, random_quadrangulation
from indforest.services.discharging import (
    UNIT,
    apply_rules,
    audit,
    final_charges,
    initial_charges,
    uncovered_negatives,
)


def _key(t):
    return (t.source, t.target, t.amount, t.rule, t.context)


def test_cube_initial_charges(q3):
    """Test that every cube vertex starts at -1 and every face at 0."""
    ledger = initial_charges(q3)

    assert ledger.vertex_charge == [-UNIT] * 8
    assert ledger.face_charge == [0] * 6
    assert ledger.total == -8 * UNIT


def test_cube_audit(q3):
    """Test the audit on the cube.

    No vertex has degree 5 or more, so nothing is sent; all eight vertices
    stay negative and the low-degree path is present.
    """
    report = audit(q3)

    assert report.total == report.expected_total == -32
    assert report.conserved
    assert report.ledger.transfers == []
    assert report.negative_vertices == list(range(8))
    assert report.hits_present
    assert "LowDegPath" in {hit.tag for hit in report.hits}
    assert report.uncovered_negatives == []
    assert report.meta_ok is True


def test_cycle_audit(c4):
    """Test the audit on C4: every vertex holds -2 and degree-2 hits exist."""
    report = audit(c4)

    assert report.final.vertices == {0: -8, 1: -8, 2: -8, 3: -8}
    assert report.total == -32
    assert "Deg2Profile" in {hit.tag for hit in report.hits}
    assert report.meta_ok is True


def test_wheel_audit():
    """Test the audit on the pseudo double wheel with ten rim vertices.

    The poles have degree 5 and five R-pairs with no common vertex, so
    neither pole sends anything; the poles keep +1 and the rim vertices -1.
    """
    pg = pseudo_double_wheel(5)
    report = audit(pg)

    assert report.ledger.transfers == []
    assert report.final.vertices[10] == report.final.vertices[11] == UNIT
    assert report.negative_vertices == list(range(10))
    assert report.total == -32
    assert report.meta_ok is True


def test_partial_audit_on_grid(grid3):
    """Test that a non-quadrangulation gets charges but no meta-claims."""
    report = audit(grid3)

    assert report.total == -32
    assert report.conserved
    assert report.meta_ok is None
    assert report.hits == []


def test_partial_audit_on_two_components(two_cubes):
    """Test that each component contributes -8 units to the expected total."""
    report = audit(two_cubes)

    assert not report.shape.connected
    assert report.total == report.expected_total == -64
    assert report.meta_ok is None


def test_audit_without_embedding():
    """Test that a rotation failing Euler's formula yields a bare report."""
    pg = from_rotation([(2, 3, 4), (2, 3, 4), (0, 1), (0, 1), (0, 1)])
    report = audit(pg)

    assert report.total is None
    assert report.conserved is None
    assert report.meta_ok is None


@st.composite
def quadrangulations(draw):
    """Seeded random quadrangulations on 6 to 18 vertices."""
    n = draw(st.integers(min_value=6, max_value=18))
    seed = draw(st.integers(min_value=0, max_value=10**6))
    return random_quadrangulation(n, random.Random(seed))


@given(quadrangulations())
@settings(max_examples=40, deadline=None)
def test_conservation_and_amounts(pg):
    """Test charge conservation and the transfer amounts.

    Totals are -8 units before and after the transfers, and every amount is
    one of 1, 2, 4 quarters or a rule-one share of 4(deg - 4).
    """
    ledger = apply_rules(pg, initial_charges(pg))
    final = final_charges(ledger)

    assert ledger.total == final.total == -8 * UNIT
    for transfer in ledger.transfers:
        excess = UNIT * (pg.graph.degree(transfer.source) - 4)
        assert transfer.amount in {1, 2, 4, excess, excess // 2}
        assert pg.graph.degree(transfer.source) >= 5


@given(quadrangulations())
@settings(max_examples=40, deadline=None)
def test_sender_order_is_irrelevant(pg):
    """Test that reversing the sender order yields the same transfers."""
    forward = apply_rules(pg, initial_charges(pg))
    backward = apply_rules(pg, initial_charges(pg), order=reversed(range(pg.n)))

    assert sorted(forward.transfers, key=_key) == sorted(backward.transfers, key=_key)
    assert final_charges(forward) == final_charges(backward)


@given(quadrangulations())
@settings(max_examples=40, deadline=None)
def test_audit_finds_a_contradiction(pg):
    """Test the audit on random quadrangulations.

    This test verifies that some configuration is always present and that
    every negative vertex of degree 5 or 6 has one inside its closed
    2-neighborhood.
    """
    report = audit(pg)

    assert report.hits_present
    assert report.uncovered_negatives == []
    assert report.meta_ok is True


def test_coverage_needs_the_whole_witness():
    """Test that a configuration must lie inside the 2-neighborhood.

    The center of a five-leaf star with a tail is negative; a witness along
    the tail only reaches into its ball, one among the leaves lies inside.
    """
    graph = build_graph(8, [(0, i) for i in range(1, 6)] + [(5, 6), (6, 7)])
    reaching = ConfigHit("LowDegPath", (5, 6, 7))
    inside = ConfigHit("LowDegPath", (0, 1, 2))

    assert uncovered_negatives(graph, [0, 1], [reaching]) == [0]
    assert uncovered_negatives(graph, [0, 1], [reaching, inside]) == []
    assert uncovered_negatives(graph, [1, 7], []) == []
