"""Reduction values: R-sets, reduction steps and their outcomes."""
from dataclasses import dataclass, field
from typing import FrozenSet, List, Optional, Tuple

from indforest.models.forest import ForestCertificate
from indforest.models.graph import Edge

# An R-set element: a single vertex or a cofacial pair, as a sorted tuple
RElement = Tuple[int, ...]


@dataclass(frozen=True)
class RSet:
    """
    The reduction targets at a vertex.

    Attributes:
        center: The vertex v
        excluded: The excluded neighbor set U
        singles: Neighbors of degree at most 2 outside U
        pairs: Cofacial pairs of degree-3 neighbors outside U
    """

    center: int
    excluded: FrozenSet[int]
    singles: Tuple[int, ...]
    pairs: Tuple[Tuple[int, int], ...]

    @property
    def elements(self) -> List[RElement]:
        return [(r,) for r in self.singles] + [tuple(p) for p in self.pairs]

    def __bool__(self) -> bool:
        return bool(self.singles or self.pairs)

    def __len__(self) -> int:
        return len(self.singles) + len(self.pairs)


@dataclass(frozen=True)
class ReductionStep:
    """
    A graph surgery together with how a child forest lifts back.

    Attributes:
        kind: Tag naming the rule or configuration that produced the step
        removed: Vertices deleted from the parent
        identified: Groups of parent vertices merged inside a common face
        added_edges: Parent vertex pairs joined by an in-face chord
        lift_add: Parent vertices added to the lifted forest
        credit: Claimed gain a(parent) - a(child)
    """

    kind: str
    removed: FrozenSet[int] = frozenset()
    identified: Tuple[Tuple[int, ...], ...] = ()
    added_edges: Tuple[Edge, ...] = ()
    lift_add: FrozenSet[int] = frozenset()
    credit: int = 0

    @property
    def recipe_credit(self) -> int:
        """|lift_add| plus |g| - 1 for each identified group g."""
        return len(self.lift_add) + sum(len(g) - 1 for g in self.identified)

    @property
    def is_identity(self) -> bool:
        return not (
            self.removed or self.identified or self.added_edges or self.lift_add
        )


@dataclass(frozen=True)
class Certification:
    """Instance-level check a(parent) >= a(child) + credit."""

    kind: str
    a_parent: int
    a_child: int
    credit: int
    ok: bool


@dataclass
class BuildResult:
    """
    Outcome of the constructive forest builder.

    Attributes:
        certificate: The forest found in the input graph
        rules: Rule chain in firing order
        meets_bound: Whether the forest reaches ceil((4n+3)/7)
        fallback_used: Whether the greedy heuristic closed some subproblem
        arity_exceeded: Step kinds skipped for exceeding the supported arity
    """

    certificate: ForestCertificate
    rules: List[str] = field(default_factory=list)
    meets_bound: bool = False
    fallback_used: bool = False
    arity_exceeded: List[str] = field(default_factory=list)
    lift_failures: int = 0
    note: Optional[str] = None
