"""Tests for the small value types."""
import pytest

from indforest.models.catalog import ShapeReport, VertexTypeLabel
from indforest.models.charges import ChargeLedger, FinalCharges, Transfer
from indforest.models.corpus import CorpusEntry
from indforest.models.forest import ForestCertificate
from indforest.models.inequality import ExceptionReport
from indforest.models.reduction import ReductionStep, RSet


def test_certificate_verify(c4):
    """Test certificate verification.

    This test verifies that three vertices of C4 pass, that all four fail
    with a witness cycle, and that a tampered size fails.
    """
    good = ForestCertificate.of([0, 1, 2], 3)
    bad = ForestCertificate.of(range(4), 3)
    tampered = ForestCertificate(frozenset({0, 1}), 3, 3)

    assert good.verify(c4.graph) and good.meets_bound
    assert not bad.verify(c4.graph)
    assert sorted(bad.witness_cycle(c4.graph)) == [0, 1, 2, 3]
    assert not tampered.verify(c4.graph)


def test_rset_elements():
    """Test that an R-set lists singles before pairs and is falsy when empty."""
    r = RSet(0, frozenset(), (3,), ((1, 2),))

    assert r.elements == [(3,), (1, 2)]
    assert len(r) == 2
    assert not RSet(0, frozenset(), (), ())


def test_step_recipe_credit():
    """Test that identified groups contribute |g| - 1 to the recipe credit."""
    step = ReductionStep(
        "R-pair", removed=frozenset({0}), identified=((1, 2),), credit=1
    )

    assert step.recipe_credit == 1
    assert not step.is_identity
    assert ReductionStep("noop").is_identity


def test_shape_report_all_hold():
    """Test ShapeReport.all_hold."""
    assert ShapeReport(True, True, True, True).all_hold
    assert not ShapeReport(True, False, True, True).all_hold


def test_vertex_type_neighbor():
    """Test the 1-based frame lookup of a type label."""
    label = VertexTypeLabel(0, "5-2-A", (5, 6, 7, 8, 9))

    assert label.neighbor(1) == 5
    assert label.neighbor(5) == 9


def test_corpus_entry_validation(q3):
    """Test that attested entries need an embedding and sources are checked."""
    with pytest.raises(ValueError):
        CorpusEntry("x", "file", q3.graph, attested_planar=True)
    with pytest.raises(ValueError):
        CorpusEntry("x", "web", q3.graph)
    assert CorpusEntry("x", "generator", q3.graph, q3, True).attested_planar


def test_ledger_totals():
    """Test that transfers are appended without touching the initial charges."""
    ledger = ChargeLedger([4, -4, -4], [0])
    moved = ledger.with_transfers([Transfer(0, 1, 2, "ii")])

    assert ledger.transfers == []
    assert moved.total == ledger.total == -4
    assert FinalCharges({0: 2, 1: -2, 2: -4}, {0: 0}).total == -4


def test_exception_status():
    """Test the realized/vacuous status of an excepted pattern."""
    assert ExceptionReport((0, 4), True).status == "realized"
    assert ExceptionReport((1, 1), False).status == "vacuous"
