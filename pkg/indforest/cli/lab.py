"""check-inequalities command."""
import logging
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import List, Optional

import click

from indforest.cli.common import finish, status_of
from indforest.core.exceptions import IndForestError
from indforest.schemas import ReportSchema, render_report
from indforest.schemas.reports import VerdictSchema
from indforest.services.inequalities import PARTS, check_ineq1, check_ineq2

logger = logging.getLogger(__name__)

PART_CHOICES = ("all", "ineq1") + tuple(str(p) for p in PARTS)


def _selected(part: str) -> List[str]:
    if part == "all":
        return ["ineq1"] + [str(p) for p in PARTS]
    return [part]


def check_part(
    part: str, value_range: Optional[int] = None, reduced: bool = True
) -> tuple:
    """
    Run one inequality check and render its report.

    Args:
        part: "ineq1" or a part number of the multi-part inequality
        value_range: Upper parameter value; the settings default when None
        reduced: Enumerate residue representatives instead of the full box

    Returns:
        (JSON line, passed)
    """
    try:
        if part == "ineq1":
            verdict = check_ineq1(value_range)
        else:
            verdict = check_ineq2(int(part), value_range=value_range, reduced=reduced)
        report = ReportSchema[VerdictSchema](
            status=status_of(verdict.ok),
            command="check-inequalities",
            entry=verdict.name,
            data=VerdictSchema.of(verdict),
        )
        passed = verdict.ok
    except IndForestError as e:
        logger.error(f"check-inequalities failed on {part}: {e.message}")
        report = ReportSchema(
            status="error",
            message=e.message,
            command="check-inequalities",
            entry=part,
            data=e.to_dict(),
        )
        passed = False
    return render_report(report), passed


@click.command("check-inequalities")
@click.option(
    "--part", type=click.Choice(PART_CHOICES), default="all", show_default=True
)
@click.option(
    "--range",
    "value_range",
    type=click.IntRange(min=1),
    default=None,
    help="Upper parameter value (settings default when unset)",
)
@click.option(
    "--full", is_flag=True, default=False, help="Enumerate the full box, not residues"
)
@click.option("--workers", type=click.IntRange(min=1), default=None)
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None)
@click.pass_context
def check_inequalities(ctx, part, value_range, full, workers, out):
    """Exhaustively check the arithmetic inequalities behind the bound."""
    settings = ctx.obj
    workers = workers or settings.WORKERS
    parts = _selected(part)
    handler = partial(check_part, value_range=value_range, reduced=not full)
    if workers > 1 and len(parts) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(handler, parts))
    else:
        outcomes = [handler(p) for p in parts]
    finish(ctx, outcomes, out)
