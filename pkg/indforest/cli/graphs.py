"""solve, verify-bound and build commands."""
from functools import partial
from typing import Optional, Tuple

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
from indforest.core.exceptions import PreconditionError
from indforest.models.corpus import CorpusEntry
from indforest.schemas import ReportSchema
from indforest.schemas.reports import BoundSchema, BuildSchema, CertificateSchema
from indforest.services.builder import build_forest
from indforest.services.solver import a_exact, bound_holds


@guarded("solve")
def solve_entry(
    entry: CorpusEntry, budget: Optional[int] = None
) -> Tuple[ReportSchema, bool]:
    certificate = a_exact(entry.graph, budget=budget)
    passed = certificate.verify(entry.graph)
    report = ReportSchema[CertificateSchema](
        status=status_of(passed),
        command="solve",
        entry=entry.id,
        data=CertificateSchema.of(certificate),
    )
    return report, passed


@guarded("verify-bound")
def verify_entry(
    entry: CorpusEntry, budget: Optional[int] = None
) -> Tuple[ReportSchema, bool]:
    result = bound_holds(entry.graph, budget=budget)
    # certificates are re-checked here before a pass is reported
    passed = result.ok and result.certificate.verify(entry.graph)
    message = None if result.in_hypothesis else "graph is not bipartite"
    report = ReportSchema[BoundSchema](
        status=status_of(passed),
        message=message,
        command="verify-bound",
        entry=entry.id,
        data=BoundSchema.of(result, passed),
    )
    return report, passed


@guarded("build")
def build_entry(
    entry: CorpusEntry, budget: Optional[int] = None, exact_max_n: Optional[int] = None
) -> Tuple[ReportSchema, bool]:
    if entry.plane is None:
        raise PreconditionError("build needs an embedding: use planar_code or --family")
    result = build_forest(entry.plane, exact_max_n=exact_max_n, budget=budget)
    passed = result.meets_bound and result.certificate.verify(entry.graph)
    report = ReportSchema[BuildSchema](
        status=status_of(passed),
        message=result.note,
        command="build",
        entry=entry.id,
        data=BuildSchema.of(result),
    )
    return report, passed


budget_option = click.option(
    "--budget", type=click.IntRange(min=1), default=None, help="Solver node budget"
)


@click.command("solve")
@corpus_options
@run_options
@budget_option
@click.pass_context
def solve(ctx, workers, out, timing, budget, **corpus):
    """Compute a maximum induced forest of every graph."""
    entries = load_or_exit(ctx, "solve", out, **corpus)
    settings = ctx.obj
    handler = partial(
        solve_entry, timing=timing or settings.REPORT_TIMING, budget=budget
    )
    finish(ctx, run_entries(handler, entries, workers or settings.WORKERS), out)


@click.command("verify-bound")
@corpus_options
@run_options
@budget_option
@click.pass_context
def verify_bound(ctx, workers, out, timing, budget, **corpus):
    """Check a(G) >= ceil((4n+3)/7) on every graph."""
    entries = load_or_exit(ctx, "verify-bound", out, **corpus)
    settings = ctx.obj
    handler = partial(
        verify_entry, timing=timing or settings.REPORT_TIMING, budget=budget
    )
    finish(ctx, run_entries(handler, entries, workers or settings.WORKERS), out)


@click.command("build")
@corpus_options
@run_options
@budget_option
@click.option("--exact-max-n", type=click.IntRange(min=0), default=None)
@click.pass_context
def build(ctx, workers, out, timing, budget, exact_max_n, **corpus):
    """Build a forest by reductions and verified lifts."""
    entries = load_or_exit(ctx, "build", out, **corpus)
    settings = ctx.obj
    handler = partial(
        build_entry,
        timing=timing or settings.REPORT_TIMING,
        budget=budget,
        exact_max_n=exact_max_n,
    )
    finish(ctx, run_entries(handler, entries, workers or settings.WORKERS), out)
