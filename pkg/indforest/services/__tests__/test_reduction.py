"""Tests for R-sets, reduction steps and forest lifting."""
import pytest

from indforest.core.exceptions import (
    LiftFailedError,
    PreconditionError,
    UnsupportedSurgeryError,
)
from indforest.models.forest import ForestCertificate
from indforest.models.plane import trace_faces
from indforest.models.reduction import ReductionStep
from indforest.services.corpus import even_cycle
from indforest.services.reduction import (
    apply_step,
    certify_reduction,
    child_order,
    closed_step,
    compute_R,
    is_closed,
    is_useful,
    lift_forest,
    r_step,
    recipe_step,
    star_reduce,
)
from indforest.services.solver import a_exact


def test_compute_r_on_cycle(c4):
    """Test that both neighbours of a C4 vertex are degree-2 singles."""
    r = compute_R(c4, 0)

    assert r.singles == (1, 3)
    assert r.pairs == ()


def test_compute_r_on_cube(q3):
    """Test the R-set of a cube vertex.

    All three neighbours have degree 3 and every pair of them is cofacial,
    so there are three pairs; excluding 1 leaves only (3, 4).
    """
    assert compute_R(q3, 0).pairs == ((1, 3), (1, 4), (3, 4))
    assert compute_R(q3, 0, [1]).pairs == ((3, 4),)


def test_compute_r_excluded_must_be_neighbors(q3):
    """Test that an excluded vertex outside N(v) raises PreconditionError."""
    with pytest.raises(PreconditionError):
        compute_R(q3, 0, [6])


def test_star_reduce_single(c4):
    """Test G*R for a single: C4 - {0, 1} is the edge 2 3."""
    child, mapping, merged = star_reduce(c4, 0, (1,))

    assert child.n == 2
    assert child.graph.m == 1
    assert merged is None
    assert 0 not in mapping and 1 not in mapping


def test_star_reduce_pair(q3):
    """Test G*R for a pair: delete 0 and identify 1 with 3 in the freed face.

    The common neighbour 2 makes a parallel edge that is merged, leaving six
    vertices and eight edges in a valid embedding.
    """
    child, mapping, merged = star_reduce(q3, 0, (1, 3))

    assert child.n == 6
    assert child.graph.m == 8
    assert mapping[1] == mapping[3] == merged
    assert child.graph.degree(merged) == 3
    trace_faces(child)


def test_certify_reductions(c4, q3):
    """Test the instance-level gain a(parent) >= a(child) + 1 for R-steps."""
    single = certify_reduction(c4, r_step(0, (1,)))
    pair = certify_reduction(q3, r_step(0, (1, 3)))

    assert (single.a_parent, single.a_child, single.ok) == (3, 2, True)
    assert pair.a_parent == 5
    assert pair.ok


def test_lift_forest_through_pair(q3):
    """Test lifting an optimal child forest back through an R-pair step.

    The identified vertex expands to both members, so the lifted forest gains
    at least one vertex and stays acyclic.
    """
    step = r_step(0, (1, 3))
    child, _, _ = apply_step(q3, step)
    child_forest = a_exact(child.graph)
    lifted = lift_forest(q3, step, child_forest)

    assert lifted.verify(q3.graph)
    assert lifted.size >= child_forest.size + 1
    assert {1, 3} <= lifted.vertices


def test_lift_failure_reports_cycle(c4):
    """Test that lifting into a cycle raises LiftFailedError with the cycle."""
    step = ReductionStep("bogus", removed=frozenset({0}), lift_add=frozenset({0}))
    child_forest = ForestCertificate.of([0, 1, 2], 2)

    with pytest.raises(LiftFailedError) as excinfo:
        lift_forest(c4, step, child_forest)
    assert sorted(excinfo.value.cycle) == [0, 1, 2, 3]


def test_edge_outside_every_face(q3):
    """Test that an added edge between non-cofacial vertices is unsupported."""
    step = ReductionStep("chord", added_edges=((0, 6),))

    with pytest.raises(UnsupportedSurgeryError):
        apply_step(q3, step)


def test_added_edge_inside_face():
    """Test that an added edge between cofacial vertices is drawn as a chord."""
    hexagon = even_cycle(3)
    child, _, _ = apply_step(hexagon, ReductionStep("chord", added_edges=((0, 3),)))

    assert child.graph.has_edge(0, 3)
    assert sorted(f.length for f in trace_faces(child)) == [4, 4, 6]


def test_closed_step_on_path(path):
    """Test the delete-and-re-add step for a leaf of a path.

    The leaf's neighbour sends one edge to it and stays, so only the leaf
    is deleted and it is re-added with credit 1.
    """
    assert is_closed(path, [0], [0])
    step = closed_step(path, [0], "leaf")

    assert step.removed == frozenset({0})
    assert step.lift_add == frozenset({0})
    assert step.credit == 1
    assert recipe_step(path, "leaf", [0], [0]) == step


def test_usefulness(c4, q3):
    """Test child orders and the usefulness test for R-steps."""
    pair = r_step(0, (1, 3))
    single = r_step(0, (1,))

    assert child_order(q3, pair) == 6
    assert child_order(c4, single) == 2
    assert is_useful(q3, pair)
    assert is_useful(c4, single)
