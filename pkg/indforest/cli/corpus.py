"""gen command: write a generated family as graph6 or planar code."""
import logging

import click

from indforest.cli.common import FORMATS, emit
from indforest.formats.graph6 import write_graph6_stream
from indforest.formats.planar_code import write_planar_code_stream
from indforest.schemas import ReportSchema, render_report
from indforest.schemas.reports import EntrySchema
from indforest.services.corpus import FAMILIES, generate_corpus

logger = logging.getLogger(__name__)


@click.command("gen")
@click.option("--family", type=click.Choice(sorted(FAMILIES)), required=True)
@click.option("--size", type=click.IntRange(min=1), default=3, show_default=True)
@click.option("--seed", type=int, default=None)
@click.option("--min-n", type=click.IntRange(min=4), default=None)
@click.option("--max-n", type=click.IntRange(min=4), default=None)
@click.option(
    "--format", "fmt", type=click.Choice(FORMATS), default="graph6", show_default=True
)
@click.option(
    "--out",
    type=click.Path(dir_okay=False, writable=True),
    default=None,
    help="Write the graphs here and list the entries on stdout",
)
def gen(family, size, seed, min_n, max_n, fmt, out):
    """
    Generate a corpus family.

    Without --out the encoded graphs go to stdout. With --out they go to the
    file, and stdout receives one report per entry.
    """
    entries = generate_corpus(family, size, seed=seed, min_n=min_n, max_n=max_n)
    if fmt == "planar_code":
        data = write_planar_code_stream([entry.plane for entry in entries])
    else:
        data = write_graph6_stream([entry.graph for entry in entries])

    if out is None:
        stream = click.get_binary_stream("stdout")
        stream.write(data)
        stream.flush()
        return

    with open(out, "wb") as handle:
        handle.write(data)
    logger.info(f"Wrote {len(entries)} graphs to {out} as {fmt}")
    emit(
        (
            render_report(
                ReportSchema[EntrySchema](
                    status="success",
                    command="gen",
                    entry=entry.id,
                    data=EntrySchema.of(entry),
                )
            )
            for entry in entries
        ),
        None,
    )
