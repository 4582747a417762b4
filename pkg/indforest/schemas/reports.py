"""Pydantic payload schemas for every report kind."""
from typing import Any, Dict, List, Optional

from pydantic import Field

from indforest.core.exceptions import IndForestError
from indforest.models.catalog import ConfigHit, ShapeReport
from indforest.models.charges import AuditReport
from indforest.models.corpus import CorpusEntry
from indforest.models.forest import BoundReport, ForestCertificate
from indforest.models.inequality import Counterexample, ExceptionReport, Verdict
from indforest.models.reduction import BuildResult, Certification, ReductionStep
from indforest.schemas import BaseSchema


class CertificateSchema(BaseSchema):
    """Schema for a forest certificate."""

    vertices: List[int] = Field(description="Sorted forest vertices", examples=[[0, 1]])
    size: int = Field(description="Forest size", examples=[5])
    bound_target: int = Field(description="ceil((4n+3)/7) of the host", examples=[5])

    @classmethod
    def of(cls, certificate: ForestCertificate) -> "CertificateSchema":
        return cls(
            vertices=certificate.sorted_vertices(),
            size=certificate.size,
            bound_target=certificate.bound_target,
        )


class BoundSchema(BaseSchema):
    """Schema for a bound check."""

    n: int = Field(description="Vertex count")
    a: int = Field(description="Maximum induced forest size")
    target: int = Field(description="The bound at n")
    ok: bool = Field(description="Whether a >= target and the certificate verifies")
    in_hypothesis: bool = Field(description="Whether the graph is bipartite")
    certificate: CertificateSchema

    @classmethod
    def of(cls, report: BoundReport, ok: bool) -> "BoundSchema":
        return cls(
            n=report.n,
            a=report.a,
            target=report.target,
            ok=ok,
            in_hypothesis=report.in_hypothesis,
            certificate=CertificateSchema.of(report.certificate),
        )


class StepSchema(BaseSchema):
    """Schema for a reduction step."""

    kind: str
    removed: List[int]
    identified: List[List[int]]
    added_edges: List[List[int]]
    lift_add: List[int]
    credit: int

    @classmethod
    def of(cls, step: ReductionStep) -> "StepSchema":
        return cls(
            kind=step.kind,
            removed=sorted(step.removed),
            identified=[list(g) for g in step.identified],
            added_edges=[list(e) for e in step.added_edges],
            lift_add=sorted(step.lift_add),
            credit=step.credit,
        )


class HitSchema(BaseSchema):
    """Schema for a detected configuration."""

    tag: str = Field(description="Catalog tag", examples=["LowDegPath"])
    witness: List[int] = Field(description="Sorted configuration vertices")
    roles: Dict[str, int] = Field(description="Named pattern vertices")
    notes: Dict[str, Any] = Field(default_factory=dict)
    valid: bool = Field(description="Result of the independent re-check")
    suggested_step: Optional[StepSchema] = None

    @classmethod
    def of(cls, hit: ConfigHit, valid: bool) -> "HitSchema":
        return cls(
            tag=hit.tag,
            witness=list(hit.witness),
            roles=dict(hit.roles),
            notes=dict(hit.notes),
            valid=valid,
            suggested_step=(
                StepSchema.of(hit.suggested_step) if hit.suggested_step else None
            ),
        )


class ShapeSchema(BaseSchema):
    """Schema for the minimal-counterexample precondition report."""

    connected: bool
    quadrangulation: bool
    min_degree_ok: bool
    bipartite: bool


class AuditSchema(BaseSchema):
    """Schema for a charge audit."""

    shape: ShapeSchema
    total: Optional[int] = Field(default=None, description="Final total, quarter units")
    expected_total: Optional[int] = Field(default=None, description="-32 per component")
    conserved: Optional[bool] = None
    transfers: int = Field(default=0, description="Number of transfers applied")
    negative_vertices: List[int] = Field(default_factory=list)
    hits_present: bool = False
    hit_tags: List[str] = Field(default_factory=list)
    uncovered_negatives: List[int] = Field(default_factory=list)
    meta_ok: Optional[bool] = None

    @classmethod
    def of(cls, report: AuditReport) -> "AuditSchema":
        shape: ShapeReport = report.shape
        return cls(
            shape=ShapeSchema.model_validate(shape),
            total=report.total,
            expected_total=report.expected_total,
            conserved=report.conserved,
            transfers=len(report.ledger.transfers) if report.ledger else 0,
            negative_vertices=report.negative_vertices,
            hits_present=report.hits_present,
            hit_tags=sorted({hit.tag for hit in report.hits}),
            uncovered_negatives=report.uncovered_negatives,
            meta_ok=report.meta_ok,
        )


class CertificationSchema(BaseSchema):
    """Schema for an instance-level reduction certification."""

    kind: str
    a_parent: Optional[int] = None
    a_child: Optional[int] = None
    credit: int
    ok: bool
    error: Optional[Dict[str, Any]] = Field(
        default=None, description="Set when a solve raised, e.g. on budget"
    )

    @classmethod
    def of(cls, certification: Certification) -> "CertificationSchema":
        return cls.model_validate(certification)

    @classmethod
    def errored(
        cls, step: ReductionStep, error: IndForestError
    ) -> "CertificationSchema":
        return cls(kind=step.kind, credit=step.credit, ok=False, error=error.to_dict())


class BuildSchema(BaseSchema):
    """Schema for a constructive build."""

    certificate: CertificateSchema
    rules: List[str]
    meets_bound: bool
    fallback_used: bool
    arity_exceeded: List[str]
    lift_failures: int
    note: Optional[str] = None

    @classmethod
    def of(cls, result: BuildResult) -> "BuildSchema":
        return cls(
            certificate=CertificateSchema.of(result.certificate),
            rules=result.rules,
            meets_bound=result.meets_bound,
            fallback_used=result.fallback_used,
            arity_exceeded=result.arity_exceeded,
            lift_failures=result.lift_failures,
            note=result.note,
        )


class CounterexampleSchema(BaseSchema):
    """Schema for a failing parameter tuple."""

    params: Dict[str, Any]
    n: int
    lhs: int
    rhs: int

    @classmethod
    def of(cls, cx: Optional[Counterexample]) -> Optional["CounterexampleSchema"]:
        if cx is None:
            return None
        return cls(params=dict(cx.params), n=cx.n, lhs=cx.lhs, rhs=cx.rhs)


class ExceptionSchema(BaseSchema):
    """Schema for one excepted residue pattern."""

    pattern: List[int]
    status: str = Field(examples=["realized", "vacuous"])
    witness: Optional[CounterexampleSchema] = None


class VerdictSchema(BaseSchema):
    """Schema for an inequality verdict."""

    name: str
    ok: bool
    checked: int
    reduced: bool
    counterexample: Optional[CounterexampleSchema] = None
    exceptions: List[ExceptionSchema] = Field(default_factory=list)

    @classmethod
    def of(cls, verdict: Verdict) -> "VerdictSchema":
        def exception(e: ExceptionReport) -> ExceptionSchema:
            return ExceptionSchema(
                pattern=list(e.pattern),
                status=e.status,
                witness=CounterexampleSchema.of(e.witness),
            )

        return cls(
            name=verdict.name,
            ok=verdict.ok,
            checked=verdict.checked,
            reduced=verdict.reduced,
            counterexample=CounterexampleSchema.of(verdict.counterexample),
            exceptions=[exception(e) for e in verdict.exceptions],
        )


class EntrySchema(BaseSchema):
    """Schema describing a corpus entry."""

    id: str
    source: str
    n: int
    m: int
    attested_planar: bool

    @classmethod
    def of(cls, entry: CorpusEntry) -> "EntrySchema":
        return cls(
            id=entry.id,
            source=entry.source,
            n=entry.graph.n,
            m=entry.graph.m,
            attested_planar=entry.attested_planar,
        )
