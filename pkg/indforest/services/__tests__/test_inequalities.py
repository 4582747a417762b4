"""Tests for the bound arithmetic and the exhaustive inequality checks."""
import pytest
from hypothesis import given
from hypothesis import strategies as st

from indforest.core.exceptions import PreconditionError
from indforest.services.inequalities import (
    PARTS,
    bound,
    check_all,
    check_ineq1,
    check_ineq2,
    residue,
    residue_table,
)


@pytest.mark.parametrize(
    "n, expected", [(1, 1), (4, 3), (5, 4), (8, 5), (9, 6), (16, 10)]
)
def test_bound_values(n, expected):
    """Test ceil((4n+3)/7) at small n."""
    assert bound(n) == expected


@given(st.integers(min_value=1, max_value=10**6))
def test_bound_period(n):
    """Test that the bound grows by exactly 4 every 7 vertices."""
    assert bound(n + 7) == bound(n) + 4


def test_residue_table():
    """Test the exported residue table.

    This test verifies the residue map at a few points, that residue r has
    slack (7 - r) mod 7, and that every increment row sums to 4.
    """
    table = residue_table()

    assert table["residues"][1] == 0
    assert table["residues"][3] == 1
    assert residue(8) == residue(1)
    assert table["slack"][0] == 0
    assert table["slack"][1] == 6
    assert all(sum(row) == 4 for row in table["increments"])
    assert len(table["increments"]) == 7


def test_split_inequality_holds():
    """Test the two-part split inequality on a small range."""
    verdict = check_ineq1(value_range=30)

    assert verdict.ok
    assert verdict.counterexample is None
    assert verdict.checked > 0


def test_split_inequality_zero_range():
    """Test that an explicit zero range checks nothing."""
    verdict = check_ineq1(value_range=0)

    assert verdict.ok
    assert verdict.checked == 0


def test_split_inequality_respects_min_k():
    """Test that a larger minimum k checks fewer tuples."""
    assert check_ineq1(value_range=10, min_k=4).checked < check_ineq1(
        value_range=10, min_k=0
    ).checked


def test_every_part_holds():
    """Test every part of the multi-part inequality over residue representatives."""
    verdicts = check_all()

    assert [v.name for v in verdicts] == [f"ineq2.part{p}" for p in PARTS]
    assert all(v.ok for v in verdicts)
    assert all(v.reduced for v in verdicts)


def test_part_two_exception_is_realized():
    """Test that the excepted pattern (0, 4) of part 2 has a violating tuple.

    Without the exception the conclusion would fail there, so the exception
    is needed and not vacuous.
    """
    verdict = check_ineq2(2)
    statuses = {e.pattern: e for e in verdict.exceptions}

    assert statuses[(0, 4)].realized
    witness = statuses[(0, 4)].witness
    assert witness.lhs < witness.rhs
    assert witness.n >= 1


def test_unknown_part():
    """Test that a part outside 1..8 raises PreconditionError."""
    with pytest.raises(PreconditionError):
        check_ineq2(9)
