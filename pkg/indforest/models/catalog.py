"""Configuration hits and vertex type labels."""
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from indforest.models.reduction import ReductionStep

CATALOG_TAGS = (
    "TwoDisjointR",
    "Deg2Profile",
    "Edge434",
    "LowDegPath",
    "DoubleRAt3",
    "WeakPlusR",
    "AllWeak3",
    "FiveTwoBFace",
    "Mixed345",
    "FiveTwoBLadder",
    "FiveOneBWheel",
    "SixTwoATwin",
    "CCadjB",
    "CCadjA",
    "CCadjB2",
)

FIVE_LABELS = ("5-2-A", "5-2-B", "5-2-C", "5-1-A", "5-1-B", "5-0")
SIX_LABELS = ("6-3", "6-2-A", "6-2-B", "6-1", "6-0")
OTHER_LABEL = "other"


@dataclass(frozen=True)
class VertexTypeLabel:
    """
    Type of a degree-5 or degree-6 vertex.

    Attributes:
        vertex: The classified vertex
        label: One of FIVE_LABELS, SIX_LABELS or "other"
        frame: Neighbors in the labelling that matched, as v_1..v_d
    """

    vertex: int
    label: str
    frame: Tuple[int, ...] = ()

    def neighbor(self, i: int) -> int:
        """The neighbor labelled v_i (1-based)."""
        return self.frame[i - 1]


@dataclass(frozen=True)
class ConfigHit:
    """
    One detected reducible configuration.

    Attributes:
        tag: Catalog tag
        witness: Sorted vertices of the configuration
        roles: Named vertices of the pattern, used for re-validation
        notes: Extra detector state (for example R-set contents)
        suggested_step: Reduction step for the configuration, when one exists
    """

    tag: str
    witness: Tuple[int, ...]
    roles: Dict[str, int] = field(default_factory=dict, compare=False, hash=False)
    notes: Dict[str, object] = field(default_factory=dict, compare=False, hash=False)
    suggested_step: Optional[ReductionStep] = field(
        default=None, compare=False, hash=False
    )

    @property
    def key(self) -> Tuple[str, Tuple[int, ...]]:
        return self.tag, self.witness


@dataclass(frozen=True)
class ShapeReport:
    """Which minimal-counterexample preconditions a plane graph satisfies."""

    connected: bool
    quadrangulation: bool
    min_degree_ok: bool
    bipartite: bool

    @property
    def all_hold(self) -> bool:
        return (
            self.connected
            and self.quadrangulation
            and self.min_degree_ok
            and self.bipartite
        )
