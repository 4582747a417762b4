"""Shared options, corpus loading, the worker pool and report output."""
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from functools import wraps
from typing import Callable, Iterable, List, Optional, Tuple

import click

from indforest.core.exceptions import IndForestError
from indforest.formats.graph6 import read_graph6_stream
from indforest.formats.planar_code import read_planar_code_stream
from indforest.models.corpus import CorpusEntry
from indforest.schemas import ReportSchema, render_report
from indforest.services.corpus import FAMILIES, generate_corpus

logger = logging.getLogger(__name__)

FORMATS = ("graph6", "planar_code")

# (JSON line, passed)
Outcome = Tuple[str, bool]


def corpus_options(func: Callable) -> Callable:
    """Options selecting the input corpus: a file (or stdin) or a generator family."""
    options = [
        click.option(
            "--input",
            "input_path",
            type=click.Path(dir_okay=False, allow_dash=True),
            default="-",
            show_default=True,
            help="Graph file; '-' reads stdin",
        ),
        click.option(
            "--format",
            "fmt",
            type=click.Choice(FORMATS),
            default="graph6",
            show_default=True,
        ),
        click.option(
            "--family",
            type=click.Choice(sorted(FAMILIES)),
            default=None,
            help="Generate the corpus instead of reading it",
        ),
        click.option(
            "--size", type=click.IntRange(min=1), default=3, show_default=True
        ),
        click.option("--seed", type=int, default=None),
        click.option("--min-n", type=click.IntRange(min=4), default=None),
        click.option("--max-n", type=click.IntRange(min=4), default=None),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def run_options(func: Callable) -> Callable:
    """Options controlling execution and output."""
    options = [
        click.option("--workers", type=click.IntRange(min=1), default=None),
        click.option(
            "--out",
            type=click.Path(dir_okay=False, writable=True),
            default=None,
            help="Write reports to a file instead of stdout",
        ),
        click.option("--timing", is_flag=True, default=False),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def load_entries(
    input_path: str,
    fmt: str,
    family: Optional[str],
    size: int,
    seed: Optional[int],
    min_n: Optional[int],
    max_n: Optional[int],
) -> List[CorpusEntry]:
    """
    Build the corpus from a generator family or from a graph file.

    Returns:
        Entries in file or generation order

    Raises:
        ParseError: on malformed input
        EmbeddingError: on a planar-code rotation system that fails Euler
    """
    if family is not None:
        return generate_corpus(family, size, seed=seed, min_n=min_n, max_n=max_n)
    if input_path == "-":
        data = click.get_binary_stream("stdin").read()
        name = "stdin"
    else:
        with open(input_path, "rb") as handle:
            data = handle.read()
        name = os.path.basename(input_path)
    if fmt == "planar_code":
        return [
            CorpusEntry(f"{name}#{i}", "file", pg.graph, pg, attested_planar=True)
            for i, pg in enumerate(read_planar_code_stream(data))
        ]
    return [
        CorpusEntry(f"{name}#{i}", "file", graph)
        for i, graph in enumerate(read_graph6_stream(data))
    ]


def guarded(command: str):
    """
    Wrap a per-entry handler: time it, and turn domain errors into error reports.

    The handler returns (report, passed); the wrapper returns (JSON line, passed).
    """

    def decorator(handler: Callable[..., Tuple[ReportSchema, bool]]):
        @wraps(handler)
        def wrapper(entry: CorpusEntry, timing: bool = False, **kwargs) -> Outcome:
            start = time.perf_counter()
            try:
                report, passed = handler(entry, **kwargs)
            except IndForestError as e:
                logger.error(f"{command} failed on {entry.id}: {e.message}")
                report = ReportSchema(
                    status="error",
                    message=e.message,
                    command=command,
                    entry=entry.id,
                    data=e.to_dict(),
                )
                passed = False
            if timing:
                report.timing = round(time.perf_counter() - start, 6)
            return render_report(report), passed

        return wrapper

    return decorator


def run_entries(
    handler: Callable[[CorpusEntry], Outcome],
    entries: Iterable[CorpusEntry],
    workers: int,
) -> List[Outcome]:
    """Apply a handler to every entry; output keeps input order."""
    entries = list(entries)
    if workers > 1 and len(entries) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(handler, entries))
    return [handler(entry) for entry in entries]


def emit(lines: Iterable[str], out: Optional[str]) -> None:
    """Write JSON lines to a file or to stdout."""
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            for line in lines:
                handle.write(line + "\n")
        return
    for line in lines:
        click.echo(line)


def finish(ctx: click.Context, outcomes: List[Outcome], out: Optional[str]) -> None:
    """Emit every report and exit 1 when any entry failed or errored."""
    emit((line for line, _ in outcomes), out)
    failed = sum(1 for _, passed in outcomes if not passed)
    if failed:
        logger.warning(f"{failed} of {len(outcomes)} reports failed")
    ctx.exit(1 if failed else 0)


def status_of(passed: bool) -> str:
    return "success" if passed else "failed"


def load_or_exit(ctx: click.Context, command: str, out: Optional[str], **options):
    """Load the corpus; on malformed input emit one error report and exit 1."""
    try:
        return load_entries(**options)
    except IndForestError as e:
        logger.error(f"{command}: cannot read input: {e.message}")
        report = ReportSchema(
            status="error", message=e.message, command=command, data=e.to_dict()
        )
        emit([render_report(report)], out)
        ctx.exit(1)
