"""Induced forest certificates."""
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Optional

from indforest.models.graph import Graph, find_cycle, induces_forest


@dataclass(frozen=True)
class ForestCertificate:
    """
    A vertex set claimed to induce a forest.

    Attributes:
        vertices: Forest vertex ids
        size: Number of vertices
        bound_target: ceil((4n+3)/7) of the host graph
    """

    vertices: FrozenSet[int]
    size: int
    bound_target: int

    @classmethod
    def of(cls, vertices: Iterable[int], bound_target: int) -> "ForestCertificate":
        members = frozenset(vertices)
        return cls(members, len(members), bound_target)

    @property
    def meets_bound(self) -> bool:
        return self.size >= self.bound_target

    def verify(self, graph: Graph) -> bool:
        """Re-check acyclicity and the recorded size against a host graph."""
        return (
            self.size == len(self.vertices)
            and all(0 <= v < graph.n for v in self.vertices)
            and induces_forest(graph, self.vertices)
        )

    def witness_cycle(self, graph: Graph) -> Optional[list]:
        return find_cycle(graph, self.vertices)

    def sorted_vertices(self) -> list:
        return sorted(self.vertices)


@dataclass(frozen=True)
class BoundReport:
    """Outcome of checking a(G) >= ceil((4n+3)/7) on one graph."""

    n: int
    a: int
    target: int
    ok: bool
    in_hypothesis: bool
    certificate: ForestCertificate
