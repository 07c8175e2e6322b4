"""
The `sieve` subcommand: norms of prime ideals up to a bound.
"""
import logging
from pathlib import Path

import click

from backend.field import field_name
from backend.sieve import dump_norm_set, sieve_norms_odd, summarize
from frontend.config.constants import SIEVE_FORMATS
from frontend.utils.options import PreconditionError, field_options, guarded, resolve_field

logger = logging.getLogger(__name__)


def summary_line(norm_set) -> str:
    counts = summarize(norm_set)
    parts = ", ".join(f"{kind.replace('_', ' ')} {count}" for kind, count in counts.items())
    return f"{len(norm_set)} norms up to {norm_set.max} (d={norm_set.d}): {parts}"


@click.command()
@field_options
@click.option("--max", "limit", type=int, required=True, help="Sieve bound.")
@click.option("--format", "fmt", type=click.Choice(SIEVE_FORMATS), default="list", show_default=True)
@click.option("-o", "--output", type=click.Path(dir_okay=False, writable=True), default=None)
@guarded
def sieve(radicand, discriminant, limit, fmt, output):
    """Print the prime-ideal norms up to --max, one per line, or write a QNS1 dump."""
    f, note = resolve_field(radicand, discriminant)
    if note:
        click.echo(note, err=True)
    if fmt == "binary" and output is None:
        raise PreconditionError("--format binary needs -o/--output")

    norm_set = sieve_norms_odd(f, limit)

    if fmt == "binary":
        Path(output).write_bytes(dump_norm_set(norm_set))
        logger.info(f"Wrote QNS1 dump for {field_name(f)} to {output}")
    else:
        listing = "".join(f"{n}\n" for n in norm_set)
        if output is None:
            click.echo(listing, nl=False)
        else:
            Path(output).write_text(listing)
            logger.info(f"Wrote {len(norm_set)} norms to {output}")

    click.echo(summary_line(norm_set), err=True)
