"""Reduction algebra: R-sets, the G*R surgery and verified forest lifts."""
import logging
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from indforest.core.exceptions import (
    EmbeddingError,
    LiftFailedError,
    PreconditionError,
    UnsupportedSurgeryError,
)
from indforest.models.forest import ForestCertificate
from indforest.models.graph import Graph, IdMap, find_cycle, induces_forest
from indforest.models.plane import (
    PlaneGraph,
    cofacial_pairs,
    delete_plane_vertices,
    identify_in_face,
    insert_edge,
)
from indforest.models.reduction import Certification, ReductionStep, RElement, RSet
from indforest.services.solver import a_exact, force_vertex, forest_target
from indforest.utils.bits import iter_bits, mask_of, popcount

logger = logging.getLogger(__name__)


def compute_R(pg: PlaneGraph, v: int, excluded: Iterable[int] = ()) -> RSet:
    """
    Enumerate the reduction targets at v.

    Args:
        pg: Plane graph
        v: Center vertex
        excluded: The set U, a subset of N(v)

    Returns:
        RSet with the neighbors of degree at most 2 outside U and the cofacial
        pairs of degree-3 neighbors outside U

    Raises:
        PreconditionError: if U is not a subset of N(v)
    """
    graph = pg.graph
    skip = frozenset(excluded)
    if mask_of(skip) & ~graph.adj[v]:
        raise PreconditionError(
            f"excluded set {sorted(skip)} is not inside N({v})", {"vertex": v}
        )
    singles = tuple(
        r for r in graph.neighbors(v) if r not in skip and graph.degree(r) <= 2
    )
    pairs = tuple(
        (r1, r2)
        for r1, r2 in cofacial_pairs(pg, v)
        if r1 not in skip
        and r2 not in skip
        and graph.degree(r1) == 3
        and graph.degree(r2) == 3
    )
    return RSet(v, skip, singles, pairs)


def r_step(v: int, element: RElement) -> ReductionStep:
    """The step G*R for one element R of an R-set at v."""
    if len(element) == 1:
        (r,) = element
        return ReductionStep(
            "R-single", removed=frozenset({v, r}), lift_add=frozenset({r}), credit=1
        )
    r1, r2 = element
    return ReductionStep(
        "R-pair", removed=frozenset({v}), identified=((r1, r2),), credit=1
    )


def _compose(first: IdMap, second: IdMap) -> IdMap:
    return {old: second[mid] for old, mid in first.items() if mid in second}


def _corner_anchor(walk: Sequence[int], x: int) -> int:
    return walk[walk.index(x) - 1]


def apply_step(
    pg: PlaneGraph, step: ReductionStep
) -> Tuple[PlaneGraph, IdMap, List[int]]:
    """
    Perform a reduction step on a plane graph.

    Removed vertices are deleted first; each identified group is then merged
    inside the first face containing all of its members, and each added edge
    is drawn as a chord of a face containing both endpoints.

    Args:
        pg: Parent plane graph
        step: Step in parent ids

    Returns:
        Child plane graph, parent-to-child id map of the survivors, and the
        child ids of the identified groups

    Raises:
        UnsupportedSurgeryError: if a group or an added edge shares no face
    """
    current, mapping = delete_plane_vertices(pg, step.removed)
    identified = []
    for group in step.identified:
        members = [mapping[u] for u in group]
        face = next(
            (f for f in current.faces if all(u in f for u in members)), None
        )
        if face is None:
            raise UnsupportedSurgeryError(
                f"group {list(group)} shares no face", {"group": list(group)}
            )
        current, merged = identify_in_face(current, face, members)
        mapping = _compose(mapping, merged)
        identified.append(mapping[group[0]])
    for u, w in step.added_edges:
        a, b = mapping[u], mapping[w]
        if a == b:
            raise UnsupportedSurgeryError(f"edge {u}{w} collapsed to a loop")
        if current.graph.has_edge(a, b):
            continue
        face = next((f for f in current.faces if a in f and b in f), None)
        if face is None:
            raise UnsupportedSurgeryError(
                f"edge {u}{w} does not lie in a face", {"edge": [u, w]}
            )
        walk = face.vertices
        current = insert_edge(
            current, a, b, _corner_anchor(walk, a), _corner_anchor(walk, b)
        )
    return current, mapping, identified


def star_reduce(
    pg: PlaneGraph, v: int, element: RElement
) -> Tuple[PlaneGraph, IdMap, Optional[int]]:
    """
    Compute G*R.

    A single R = {r} gives G - {v, r}; a pair R = {r1, r2} gives (G - v)/r1r2,
    identified inside the face left by v.

    Returns:
        The reduced plane graph, the id map and the identified vertex (pairs)
    """
    child, mapping, identified = apply_step(pg, r_step(v, element))
    return child, mapping, identified[0] if identified else None


def _inverse(mapping: IdMap) -> Dict[int, List[int]]:
    inverse: Dict[int, List[int]] = {}
    for old, new in mapping.items():
        inverse.setdefault(new, []).append(old)
    return inverse


def lift_vertices(
    parent: PlaneGraph,
    step: ReductionStep,
    child: PlaneGraph,
    mapping: IdMap,
    identified: Sequence[int],
    child_forest: Iterable[int],
) -> frozenset:
    """
    Lift a child forest through an already applied step and verify it.

    An identified vertex missing from the child forest is exchanged in first
    when its degree allows, so every group expands to all of its members.

    Raises:
        LiftFailedError: if a group cannot be forced in, or the lifted set
            induces a cycle in the parent
    """
    forest = frozenset(child_forest)
    for vid in identified:
        if vid in forest:
            continue
        if child.graph.degree(vid) > 3:
            raise LiftFailedError(
                f"identified vertex {vid} is outside the child forest and has degree "
                f"{child.graph.degree(vid)}"
            )
        forest = force_vertex(child.graph, forest, vid)
    inverse = _inverse(mapping)
    lifted = set(step.lift_add)
    for u in forest:
        lifted.update(inverse.get(u, ()))
    if not induces_forest(parent.graph, lifted):
        cycle = find_cycle(parent.graph, lifted)
        raise LiftFailedError(f"lift through {step.kind} closes a cycle", cycle)
    return frozenset(lifted)


def lift_forest(
    parent: PlaneGraph, step: ReductionStep, child_forest: ForestCertificate
) -> ForestCertificate:
    """
    Translate a forest of the reduced graph back to the parent.

    Args:
        parent: Plane graph the step was applied to
        step: The reduction step
        child_forest: Forest certificate in the child graph

    Returns:
        A parent forest certificate, verified acyclic

    Raises:
        LiftFailedError: when the lifted set is not a forest
    """
    child, mapping, identified = apply_step(parent, step)
    lifted = lift_vertices(
        parent, step, child, mapping, identified, child_forest.vertices
    )
    return ForestCertificate.of(lifted, forest_target(parent.n))


def certify_reduction(
    pg: PlaneGraph, step: ReductionStep, budget: Optional[int] = None
) -> Certification:
    """
    Check a(parent) >= a(child) + credit with exact solves on both sides.

    Raises:
        BudgetExceededError: if either solve exceeds the budget
    """
    child, _, _ = apply_step(pg, step)
    a_parent = a_exact(pg.graph, budget=budget).size
    a_child = a_exact(child.graph, budget=budget).size
    ok = a_parent >= a_child + step.credit
    logger.info(
        f"Certified {step.kind}: a(parent)={a_parent}, a(child)={a_child}, "
        f"credit={step.credit}, ok={ok}"
    )
    return Certification(step.kind, a_parent, a_child, step.credit, ok)


def is_closed(graph: Graph, removed: Iterable[int], keep: Iterable[int]) -> bool:
    """
    Whether re-adding keep to any forest of G - removed always gives a forest.

    This holds when keep is a deleted forest whose every tree has at most one
    edge to the surviving vertices.
    """
    gone = mask_of(removed)
    kept = mask_of(keep)
    if kept & ~gone or not induces_forest(graph, kept):
        return False
    survivors = graph.all_mask & ~gone
    return all(
        sum(popcount(graph.adj[u] & survivors) for u in iter_bits(tree)) <= 1
        for tree in graph.component_masks(kept)
    )


def closed_step(
    graph: Graph, keep: Iterable[int], kind: str
) -> Optional[ReductionStep]:
    """
    Build a deletion step that re-adds keep to the child forest.

    The deleted set is keep plus its neighborhood, minus attachment vertices
    chosen in id order: a neighbor t stays when it sends exactly one edge to
    each tree of G[keep] it touches and none of those trees is attached yet.

    Returns:
        The step, or None when keep does not induce a forest
    """
    kept = mask_of(keep)
    if not kept or not induces_forest(graph, kept):
        return None
    trees = graph.component_masks(kept)
    boundary = 0
    for u in iter_bits(kept):
        boundary |= graph.adj[u]
    boundary &= ~kept
    attached = set()
    stays = 0
    for t in iter_bits(boundary):
        touched = [i for i, tree in enumerate(trees) if graph.adj[t] & tree]
        if all(popcount(graph.adj[t] & trees[i]) == 1 for i in touched) and not (
            attached & set(touched)
        ):
            attached.update(touched)
            stays |= 1 << t
    removed = (kept | boundary) & ~stays
    return ReductionStep(
        kind,
        removed=frozenset(iter_bits(removed)),
        lift_add=frozenset(iter_bits(kept)),
        credit=popcount(kept),
    )


def recipe_step(
    graph: Graph, kind: str, removed: Iterable[int], keep: Iterable[int]
) -> Optional[ReductionStep]:
    """A delete-and-re-add recipe, repaired into a closed step when it is not closed."""
    removed, keep = frozenset(removed), frozenset(keep)
    if is_closed(graph, removed, keep):
        return ReductionStep(kind, removed=removed, lift_add=keep, credit=len(keep))
    return closed_step(graph, keep, kind)


def child_order(pg: PlaneGraph, step: ReductionStep) -> int:
    """Vertex count of the child graph of a step."""
    merged = sum(len(g) - 1 for g in step.identified)
    return pg.n - len(step.removed) - merged


def is_useful(pg: PlaneGraph, step: ReductionStep) -> bool:
    """Whether the bound for the child plus the credit reaches the parent bound."""
    n_child = child_order(pg, step)
    if n_child < 0:
        raise EmbeddingError(f"step {step.kind} removes more vertices than exist")
    return forest_target(n_child) + step.credit >= forest_target(pg.n)
