"""Constructive forest builder: reduce, recurse, lift and verify."""
import logging
from typing import Iterator, List, Optional

from indforest.core.config import get_settings
from indforest.core.exceptions import (
    BudgetExceededError,
    EmbeddingError,
    IndForestError,
    LiftFailedError,
)
from indforest.models.forest import ForestCertificate
from indforest.models.graph import induces_forest
from indforest.models.plane import PlaneGraph, add_chord, euler_defects, restrict_to
from indforest.models.reduction import BuildResult, ReductionStep
from indforest.services.catalog import detect
from indforest.services.reduction import (
    apply_step,
    compute_R,
    is_useful,
    lift_vertices,
    r_step,
)
from indforest.services.solver import a_exact, forest_target, greedy_forest
from indforest.utils.bits import iter_bits

logger = logging.getLogger(__name__)

MAX_GROUP = 2
MAX_KEEP = 8


class _Builder:
    def __init__(self, exact_max_n: int, budget: Optional[int], root_n: int):
        self.exact_max_n = exact_max_n
        self.budget = budget
        self.max_depth = root_n
        self.rules: List[str] = []
        self.fallbacks = 0
        self.lift_failures = 0
        self.arity_exceeded: List[str] = []

    def greedy(self, pg: PlaneGraph) -> frozenset:
        self.rules.append("greedy")
        self.fallbacks += 1
        return frozenset(iter_bits(greedy_forest(pg.graph)))

    def build(self, pg: PlaneGraph, depth: int = 0) -> frozenset:
        graph = pg.graph
        if pg.n == 0:
            return frozenset()
        if pg.n <= self.exact_max_n:
            self.rules.append("exact")
            try:
                return a_exact(graph, budget=self.budget).vertices
            except BudgetExceededError:
                logger.warning(f"Exact solve on n={pg.n} ran out of budget")
                return self.greedy(pg)
        if depth > self.max_depth:
            return self.greedy(pg)

        components = graph.component_masks()
        if len(components) > 1:
            self.rules.append("components")
            forest = set()
            for comp in components:
                sub, mapping = restrict_to(pg, iter_bits(comp))
                back = {new: old for old, new in mapping.items()}
                forest.update(back[u] for u in self.build(sub, depth))
            return frozenset(forest)

        pendant = next((v for v in range(pg.n) if graph.degree(v) <= 1), None)
        if pendant is not None:
            step = ReductionStep(
                "pendant",
                removed=frozenset({pendant}),
                lift_add=frozenset({pendant}),
                credit=1,
            )
            lifted = self.try_step(pg, step, depth)
            if lifted is not None:
                return lifted

        chorded = self.chord(pg)
        if chorded is not None:
            self.rules.append("chord")
            return self.build(chorded, depth)

        for step in self.candidates(pg):
            lifted = self.try_step(pg, step, depth)
            if lifted is not None:
                return lifted
        return self.greedy(pg)

    def chord(self, pg: PlaneGraph) -> Optional[PlaneGraph]:
        for face in pg.faces:
            if face.length < 6:
                continue
            try:
                child = add_chord(pg, face)
            except EmbeddingError:
                continue
            if not euler_defects(child):
                return child
        return None

    def candidates(self, pg: PlaneGraph) -> Iterator[ReductionStep]:
        for v in range(pg.n):
            for element in compute_R(pg, v).elements:
                yield r_step(v, element)
        for hit in detect(pg):
            if hit.suggested_step is not None:
                yield hit.suggested_step

    def within_arity(self, step: ReductionStep) -> bool:
        too_wide = any(len(g) > MAX_GROUP for g in step.identified)
        if too_wide or len(step.lift_add) > MAX_KEEP:
            if step.kind not in self.arity_exceeded:
                self.arity_exceeded.append(step.kind)
            return False
        return True

    def try_step(
        self, pg: PlaneGraph, step: ReductionStep, depth: int
    ) -> Optional[frozenset]:
        if not self.within_arity(step) or not is_useful(pg, step):
            return None
        try:
            child, mapping, identified = apply_step(pg, step)
        except IndForestError as e:
            logger.debug(f"Skipping {step.kind}: {e.message}")
            return None
        mark = len(self.rules)
        self.rules.append(step.kind)
        child_forest = self.build(child, depth + 1)
        try:
            return lift_vertices(pg, step, child, mapping, identified, child_forest)
        except LiftFailedError as e:
            logger.debug(f"Lift through {step.kind} failed: {e.message}")
            self.lift_failures += 1
            del self.rules[mark:]
            return None


def build_forest(
    pg: PlaneGraph, exact_max_n: Optional[int] = None, budget: Optional[int] = None
) -> BuildResult:
    """
    Build an induced forest by recursive reduction.

    Rules are tried in order: empty graph, exact solve for small graphs,
    component split, pendant deletion, chord insertion in faces of length at
    least 6, then the R-steps and the catalog's suggested steps. A step is
    applied only when it is useful, and its lift is verified; when every
    step fails the greedy heuristic closes the subproblem.

    Args:
        pg: Plane graph
        exact_max_n: Largest subproblem solved exactly (default from settings)
        budget: Node budget of each exact solve

    Returns:
        BuildResult with the verified certificate and the rule chain
    """
    if exact_max_n is None:
        exact_max_n = get_settings().BUILD_EXACT_MAX_N
    builder = _Builder(exact_max_n, budget, pg.n)
    vertices = builder.build(pg)
    certificate = ForestCertificate.of(vertices, forest_target(pg.n))
    if not induces_forest(pg.graph, vertices):
        raise LiftFailedError(
            "builder produced a cyclic set", certificate.witness_cycle(pg.graph)
        )
    result = BuildResult(
        certificate=certificate,
        rules=builder.rules,
        meets_bound=certificate.meets_bound,
        fallback_used=builder.fallbacks > 0,
        arity_exceeded=builder.arity_exceeded,
        lift_failures=builder.lift_failures,
    )
    if result.fallback_used:
        result.note = f"greedy heuristic closed {builder.fallbacks} subproblem(s)"
    logger.info(
        f"Built forest on n={pg.n}: size={certificate.size}, "
        f"target={certificate.bound_target}, rules={len(builder.rules)}"
    )
    return result
