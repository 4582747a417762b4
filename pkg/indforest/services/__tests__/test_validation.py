"""Tests for the role-based re-check of detected configurations."""
import random

from hypothesis import given, settings
from hypothesis import strategies as st

from indforest.models.catalog import CATALOG_TAGS, ConfigHit
from indforest.services import catalog
from indforest.services.catalog import detect
from indforest.services.corpus import pseudo_double_wheel, random_quadrangulation
from indforest.services.validation import ROLE_SPECS, FaceView, validate_hit


@st.composite
def quadrangulations(draw):
    """Seeded random quadrangulations on 6 to 24 vertices."""
    n = draw(st.integers(min_value=6, max_value=24))
    seed = draw(st.integers(min_value=0, max_value=10**6))
    return random_quadrangulation(n, random.Random(seed))


def test_role_specs_cover_catalog():
    """Test that every catalog tag has a role specification."""
    assert set(ROLE_SPECS) == set(CATALOG_TAGS)


def test_view_of_k23(k23):
    """Test corners and opposites on K2,3.

    Both faces at the degree-2 vertex 2 have the corner 0-2-1, so both far
    vertices are reported; the degree-3 vertex 0 has one cyclic order per
    start and direction.
    """
    view = FaceView(k23)

    assert view.opposites(2, 0, 1) == {3, 4}
    assert view.opposites(2, 0, 0) == set()
    assert view.walk(0, 2, 3) == [2, 3, 4]
    assert view.walk(0, 3, 2) == [3, 2, 4]
    assert len(view.orders(0)) == 6


def test_view_of_wheel_pole():
    """Test the cyclic order around the degree-5 pole of a wheel."""
    pg = pseudo_double_wheel(5)
    view = FaceView(pg)

    assert view.walk(10, 0, 2) == [0, 2, 4, 6, 8]
    assert view.walk(10, 0, 4) is None
    assert view.opposites(10, 0, 2) == {1}
    assert view.reducible_at(10)
    assert not view.reducible_at(0, (1, 9, 10))


def test_broken_predicate_is_caught(q3, monkeypatch):
    """Test a detector whose predicate accepts everything.

    Every degree-3 vertex of the cube is proposed as a 3-4-5 neighborhood;
    the re-check reads the real degrees and rejects all of them.
    """
    monkeypatch.setitem(catalog.PATTERNS, "Mixed345", lambda local, roles: True)
    hits = detect(q3, ["Mixed345"])

    assert len(hits) == 8
    assert not any(validate_hit(q3, hit) for hit in hits)


def test_malformed_roles(q3):
    """Test unknown tags, missing roles and out-of-range vertices."""
    assert not validate_hit(q3, ConfigHit("NoSuchTag", (0,), {"x": 0}))
    assert not validate_hit(q3, ConfigHit("Edge434", (0,), {"x": 0}))
    assert not validate_hit(q3, ConfigHit("AllWeak3", (99,), {"x": 99}))
    assert validate_hit(q3, ConfigHit("AllWeak3", (0,), {"x": 0}))


def test_wheel_hits_validate():
    """Test that every hit on the pseudo double wheels re-validates."""
    for k in range(2, 7):
        pg = pseudo_double_wheel(k)
        view = FaceView(pg)

        assert all(validate_hit(pg, hit, view) for hit in detect(pg))


@given(quadrangulations())
@settings(max_examples=40, deadline=None)
def test_quadrangulation_hits_validate(pg):
    """Test that detection and the re-check agree on random quadrangulations."""
    view = FaceView(pg)
    hits = detect(pg)

    assert hits
    assert all(validate_hit(pg, hit, view) for hit in hits)
