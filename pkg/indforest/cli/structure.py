"""audit, detect and reduce commands."""
import logging
from functools import partial
from typing import Optional, Sequence, Tuple

import click

from indforest.cli.common import (
    corpus_options,
    finish,
    guarded,
    load_or_exit,
    run_entries,
    run_options,
    status_of,
)
from indforest.core.exceptions import IndForestError, PreconditionError
from indforest.models.catalog import CATALOG_TAGS
from indforest.models.corpus import CorpusEntry
from indforest.models.plane import PlaneGraph
from indforest.schemas import ReportSchema
from indforest.schemas.reports import AuditSchema, CertificationSchema, HitSchema
from indforest.services.catalog import detect
from indforest.services.discharging import audit
from indforest.services.reduction import certify_reduction
from indforest.services.validation import FaceView, validate_hit

logger = logging.getLogger(__name__)

CERTIFIED_TAGS = ("TwoDisjointR", "Deg2Profile", "LowDegPath")


def _plane(entry: CorpusEntry, command: str) -> PlaneGraph:
    if entry.plane is None:
        raise PreconditionError(
            f"{command} needs an embedding: use planar_code input or --family"
        )
    return entry.plane


@guarded("audit")
def audit_entry(entry: CorpusEntry) -> Tuple[ReportSchema, bool]:
    result = audit(_plane(entry, "audit"))
    passed = result.conserved is True and result.meta_ok is not False
    if not passed:
        status = "failed"
    elif result.meta_ok is None:
        # shape preconditions failed: charges only, no contradiction claimed
        status = "partial"
    else:
        status = "success"
    report = ReportSchema[AuditSchema](
        status=status,
        command="audit",
        entry=entry.id,
        data=AuditSchema.of(result),
    )
    return report, passed


@guarded("detect")
def detect_entry(
    entry: CorpusEntry, tags: Optional[Sequence[str]] = None
) -> Tuple[ReportSchema, bool]:
    pg = _plane(entry, "detect")
    view = FaceView(pg)
    hits = [
        HitSchema.of(hit, validate_hit(pg, hit, view))
        for hit in detect(pg, tags or None)
    ]
    passed = all(hit.valid for hit in hits)
    report = ReportSchema[list[HitSchema]](
        status=status_of(passed),
        message=f"{len(hits)} configurations",
        command="detect",
        entry=entry.id,
        data=hits,
    )
    return report, passed


@guarded("reduce")
def reduce_entry(
    entry: CorpusEntry,
    tags: Sequence[str] = CERTIFIED_TAGS,
    max_n: int = 14,
    budget: Optional[int] = None,
) -> Tuple[ReportSchema, bool]:
    pg = _plane(entry, "reduce")
    if pg.n > max_n:
        report = ReportSchema[list[CertificationSchema]](
            status="skipped",
            message=f"n={pg.n} exceeds {max_n}",
            command="reduce",
            entry=entry.id,
            data=[],
        )
        return report, True
    certifications = []
    errors = 0
    seen = set()
    for hit in detect(pg, tags):
        step = hit.suggested_step
        if step is None or step in seen:
            continue
        seen.add(step)
        try:
            certification = certify_reduction(pg, step, budget=budget)
        except IndForestError as e:
            logger.error(f"Cannot certify {step.kind} on {entry.id}: {e.message}")
            certifications.append(CertificationSchema.errored(step, e))
            errors += 1
            continue
        certifications.append(CertificationSchema.of(certification))
    passed = all(c.ok for c in certifications)
    message = f"{len(certifications)} certifications"
    if errors:
        message += f", {errors} errored"
    report = ReportSchema[list[CertificationSchema]](
        status="error" if errors else status_of(passed),
        message=message,
        command="reduce",
        entry=entry.id,
        data=certifications,
    )
    return report, passed


tag_option = click.option(
    "--tag",
    "tags",
    multiple=True,
    type=click.Choice(CATALOG_TAGS),
    help="Restrict to these catalog tags (repeatable)",
)


@click.command("audit")
@corpus_options
@run_options
@click.pass_context
def audit_command(ctx, workers, out, timing, **corpus):
    """Run the discharging audit on every embedded graph."""
    entries = load_or_exit(ctx, "audit", out, **corpus)
    settings = ctx.obj
    handler = partial(audit_entry, timing=timing or settings.REPORT_TIMING)
    finish(ctx, run_entries(handler, entries, workers or settings.WORKERS), out)


@click.command("detect")
@corpus_options
@run_options
@tag_option
@click.pass_context
def detect_command(ctx, workers, out, timing, tags, **corpus):
    """Detect the reducible configurations of every embedded graph."""
    entries = load_or_exit(ctx, "detect", out, **corpus)
    settings = ctx.obj
    handler = partial(
        detect_entry, timing=timing or settings.REPORT_TIMING, tags=tuple(tags)
    )
    finish(ctx, run_entries(handler, entries, workers or settings.WORKERS), out)


@click.command("reduce")
@corpus_options
@run_options
@tag_option
@click.option("--budget", type=click.IntRange(min=1), default=None)
@click.option(
    "--max-n-certify", "max_n_certify", type=int, default=14, show_default=True
)
@click.pass_context
def reduce_command(ctx, workers, out, timing, tags, budget, max_n_certify, **corpus):
    """Certify the suggested reduction steps with exact solves."""
    entries = load_or_exit(ctx, "reduce", out, **corpus)
    settings = ctx.obj
    handler = partial(
        reduce_entry,
        timing=timing or settings.REPORT_TIMING,
        tags=tuple(tags) or CERTIFIED_TAGS,
        max_n=max_n_certify,
        budget=budget,
    )
    finish(ctx, run_entries(handler, entries, workers or settings.WORKERS), out)
