"""Maximum induced forest solvers."""
import logging
from itertools import combinations
from typing import Iterable, Optional, Tuple

import networkx as nx

from indforest.core.config import get_settings
from indforest.core.exceptions import BudgetExceededError, PreconditionError
from indforest.models.forest import BoundReport, ForestCertificate
from indforest.models.graph import Graph, induces_forest, is_bipartite
from indforest.services.inequalities import bound
from indforest.utils.bits import bit, iter_bits, lowest, mask_of, members, popcount

logger = logging.getLogger(__name__)


def forest_target(n: int) -> int:
    """The bound of an n-vertex host graph; 0 for the empty graph."""
    return bound(n) if n >= 1 else 0


class _Search:
    """Branch-and-bound state shared by both solver phases."""

    def __init__(self, graph: Graph, budget: int):
        self.graph = graph
        self.budget = budget
        self.nodes = 0
        self.best = -1
        self.best_set = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceededError(self.nodes, self.budget)

    def reduce(self, forest: int, undecided: int) -> Tuple[int, int]:
        """
        Apply the forced decisions until nothing changes.

        An undecided vertex with two neighbors in one tree of the forest is
        excluded; one with at most one neighbor among the live vertices is
        included, since it lies on no cycle of any completion.
        """
        adj = self.graph.adj
        changed = True
        while changed:
            changed = False
            trees = self.graph.component_masks(forest)
            for u in iter_bits(undecided):
                if any(popcount(adj[u] & tree) >= 2 for tree in trees):
                    undecided &= ~bit(u)
                    changed = True
            live = forest | undecided
            low = 0
            for u in iter_bits(undecided):
                if popcount(adj[u] & live) <= 1:
                    low |= bit(u)
            if low:
                forest |= low
                undecided &= ~low
                changed = True
        return forest, undecided

    def upper_bound(self, forest: int, undecided: int) -> int:
        """
        Live vertex count minus a lower bound on the deletions still needed.

        Deleting a vertex of degree d lowers the cycle rank e - v + c by at
        most max(d - 1, 0).
        """
        graph = self.graph
        live = forest | undecided
        size = popcount(live)
        rank = graph.edges_within(live) - size + len(graph.component_masks(live))
        if rank == 0:
            return size
        gains = sorted(
            (max(popcount(graph.adj[u] & live) - 1, 0) for u in iter_bits(undecided)),
            reverse=True,
        )
        covered = deletions = 0
        for gain in gains:
            if covered >= rank:
                break
            covered += gain
            deletions += 1
        return size - deletions

    def pick(self, forest: int, undecided: int) -> int:
        live = forest | undecided
        return min(
            iter_bits(undecided), key=lambda u: (-popcount(self.graph.adj[u] & live), u)
        )

    def maximize(self, forest: int, undecided: int) -> None:
        self.tick()
        forest, undecided = self.reduce(forest, undecided)
        ub = self.upper_bound(forest, undecided)
        if ub <= self.best:
            return
        live = forest | undecided
        if ub == popcount(live) and induces_forest(self.graph, live):
            self.best, self.best_set = ub, live
            return
        if not undecided:
            self.best, self.best_set = popcount(forest), forest
            return
        u = self.pick(forest, undecided)
        self.maximize(forest | bit(u), undecided & ~bit(u))
        self.maximize(forest, undecided & ~bit(u))

    def lex_first(self, forest: int, undecided: int, target: int) -> Optional[int]:
        self.tick()
        forest, undecided = self.reduce(forest, undecided)
        if popcount(forest) >= target:
            return forest
        if not undecided or self.upper_bound(forest, undecided) < target:
            return None
        u = lowest(undecided)
        found = self.lex_first(forest | bit(u), undecided & ~bit(u), target)
        if found is not None:
            return found
        return self.lex_first(forest, undecided & ~bit(u), target)


def a_exact(
    graph: Graph, budget: Optional[int] = None, required: Iterable[int] = ()
) -> ForestCertificate:
    """
    Compute a maximum induced forest.

    The first phase finds the optimum value by branch and bound on the
    complementary feedback vertex set; the second returns the
    lexicographically least optimal vertex set.

    Args:
        graph: Input graph
        budget: Branch node budget shared by both phases
        required: Vertices forced into the forest

    Returns:
        Certificate of the maximum (constrained) forest

    Raises:
        BudgetExceededError: if the search needs more nodes than the budget
        PreconditionError: if the required vertices already contain a cycle
    """
    budget = get_settings().SOLVER_NODE_BUDGET if budget is None else budget
    start = mask_of(required)
    if not induces_forest(graph, start):
        raise PreconditionError("required vertices induce a cycle")
    search = _Search(graph, budget)
    undecided = graph.all_mask & ~start

    seed = greedy_forest(graph, start)
    search.best, search.best_set = popcount(seed), seed
    search.maximize(start, undecided)
    value = search.best

    chosen = search.lex_first(start, undecided, value)
    if chosen is None:
        chosen = search.best_set
    logger.debug(f"Exact solve n={graph.n}: a={value} in {search.nodes} nodes")
    return ForestCertificate.of(iter_bits(chosen), forest_target(graph.n))


def a_bruteforce(graph: Graph, max_n: Optional[int] = None) -> ForestCertificate:
    """
    Maximum induced forest by subset enumeration, largest subsets first.

    Subsets of each size are scanned in lexicographic order, so the result has
    the same tie-break as a_exact.

    Raises:
        PreconditionError: if n exceeds max_n
    """
    max_n = get_settings().BRUTEFORCE_MAX_N if max_n is None else max_n
    if graph.n > max_n:
        raise PreconditionError(
            f"subset enumeration is limited to {max_n} vertices, got {graph.n}",
            {"n": graph.n, "max_n": max_n},
        )
    for size in range(graph.n, -1, -1):
        for subset in combinations(range(graph.n), size):
            if induces_forest(graph, subset):
                return ForestCertificate.of(subset, forest_target(graph.n))
    return ForestCertificate.of((), forest_target(graph.n))


def force_vertex(graph: Graph, forest: Iterable[int], v: int) -> frozenset:
    """
    Exchange a vertex of degree at most 3 into a forest without shrinking it.

    If at most two neighbors of v are in the forest, one of them is swapped
    out. Otherwise the vertex of the forest separating the three neighbors
    pairwise is swapped out.

    Args:
        graph: Host graph
        forest: Vertices inducing a forest
        v: Vertex with degree at most 3

    Returns:
        A forest containing v with at least as many vertices
    """
    if graph.degree(v) > 3:
        raise PreconditionError(f"vertex {v} has degree {graph.degree(v)} > 3")
    current = frozenset(forest)
    if v in current:
        return current
    inside = sorted(u for u in graph.neighbors(v) if u in current)
    if induces_forest(graph, current | {v}):
        return current | {v}
    if len(inside) <= 2:
        return (current - {inside[0]}) | {v}

    tree = graph.to_networkx(mask_of(current))
    n1, n2, n3 = inside
    paths = [
        set(nx.shortest_path(tree, x, y))
        for x, y in ((n1, n2), (n1, n3), (n2, n3))
        if nx.has_path(tree, x, y)
    ]
    if len(paths) == 3:
        median = min(paths[0] & paths[1] & paths[2])
    else:
        # two neighbors share a tree; drop one of them
        median = next(u for u in inside if u in paths[0])
    result = (current - {median}) | {v}
    assert induces_forest(graph, result)
    return result


def a_with_forced_vertex(
    graph: Graph, v: int, budget: Optional[int] = None
) -> ForestCertificate:
    """
    Maximum induced forest required to contain v.

    For deg(v) <= 3 the optimum with v forced equals a(G); this is checked on
    every call.

    Raises:
        PreconditionError: if deg(v) >= 4
    """
    if graph.degree(v) >= 4:
        raise PreconditionError(
            f"forcing needs degree at most 3, vertex {v} has {graph.degree(v)}",
            {"vertex": v, "degree": graph.degree(v)},
        )
    forced = a_exact(graph, budget=budget, required=[v])
    free = a_exact(graph, budget=budget)
    assert (
        forced.size == free.size
    ), f"forcing {v} lost size: {forced.size} < {free.size}"
    return forced


def _addable(graph: Graph, forest: int, u: int) -> bool:
    return induces_forest(graph, forest | bit(u))


def greedy_forest(graph: Graph, start: int = 0) -> int:
    """
    Cycle-breaking heuristic.

    Vertices are inserted by minimum degree among the still-possible
    vertices, then one-out/two-in exchanges are applied until none improves.

    Args:
        graph: Input graph
        start: Mask of vertices that must stay in the forest

    Returns:
        Mask of a maximal induced forest containing start
    """
    forest = start
    candidates = graph.all_mask & ~start
    while candidates:
        live = forest | candidates
        u = min(
            iter_bits(candidates), key=lambda w: (popcount(graph.adj[w] & live), w)
        )
        candidates &= ~bit(u)
        if _addable(graph, forest, u):
            forest |= bit(u)

    improved = True
    while improved:
        improved = False
        outside = graph.all_mask & ~forest
        for x in members(forest & ~start):
            reduced = forest & ~bit(x)
            freed = [y for y in iter_bits(outside) if _addable(graph, reduced, y)]
            for y, z in combinations(freed, 2):
                swapped = reduced | bit(y) | bit(z)
                if induces_forest(graph, swapped):
                    forest = swapped
                    improved = True
                    break
            if improved:
                break
    return forest


def bound_holds(graph: Graph, budget: Optional[int] = None) -> BoundReport:
    """
    Check a(G) >= ceil((4n+3)/7).

    Args:
        graph: Input graph; planarity is attested by the caller
        budget: Solver node budget

    Returns:
        Report with a, the target, the verdict and whether G is bipartite
    """
    certificate = a_exact(graph, budget=budget)
    target = forest_target(graph.n)
    in_hypothesis = is_bipartite(graph) is not None
    if not in_hypothesis:
        logger.warning(f"Graph with n={graph.n} is not bipartite; bound not implied")
    ok = certificate.size >= target and certificate.verify(graph)
    return BoundReport(
        graph.n, certificate.size, target, ok, in_hypothesis, certificate
    )

