"""Charge ledgers in exact quarter units."""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from indforest.models.catalog import ConfigHit, ShapeReport


@dataclass(frozen=True)
class Transfer:
    """Charge moved from a sender to a vertex, in quarter units."""

    source: int
    target: int
    amount: int
    rule: str
    context: Tuple[int, ...] = ()


@dataclass
class ChargeLedger:
    """
    Initial charges plus the transfers applied to them.

    Attributes:
        vertex_charge: Initial charge per vertex, 4(deg(v) - 4)
        face_charge: Initial charge per traced face, 4(len(f) - 4)
        transfers: Transfers in application order
    """

    vertex_charge: List[int]
    face_charge: List[int]
    transfers: List[Transfer] = field(default_factory=list)

    @property
    def total(self) -> int:
        return sum(self.vertex_charge) + sum(self.face_charge)

    def with_transfers(self, transfers: List[Transfer]) -> "ChargeLedger":
        return ChargeLedger(
            list(self.vertex_charge),
            list(self.face_charge),
            list(self.transfers) + list(transfers),
        )


@dataclass(frozen=True)
class FinalCharges:
    """Charges after every transfer."""

    vertices: Dict[int, int]
    faces: Dict[int, int]

    @property
    def total(self) -> int:
        return sum(self.vertices.values()) + sum(self.faces.values())


@dataclass
class AuditReport:
    """
    Charge audit of one plane graph.

    Charge fields are None when the embedding could not be traced; meta_ok is
    None unless every minimal-counterexample precondition holds.
    """

    shape: ShapeReport
    total: Optional[int] = None
    expected_total: Optional[int] = None
    conserved: Optional[bool] = None
    negative_vertices: List[int] = field(default_factory=list)
    hits: List[ConfigHit] = field(default_factory=list)
    hits_present: bool = False
    uncovered_negatives: List[int] = field(default_factory=list)
    meta_ok: Optional[bool] = None
    final: Optional[FinalCharges] = None
    ledger: Optional[ChargeLedger] = None
