"""
The `verify` subcommand: fast paths against brute-force oracles.
"""
import logging

import click

from backend.field import field_name
from backend.verify import MAX_WITNESSES, verify_field
from frontend.config.constants import DEFAULT_VERIFY_BOX, DEFAULT_VERIFY_MAX, EXIT_MISMATCH
from frontend.utils.options import field_options, guarded, resolve_field

logger = logging.getLogger(__name__)


@click.command()
@field_options
@click.option("--max", "limit", type=int, default=DEFAULT_VERIFY_MAX, show_default=True, help="Sieve bound to check.")
@click.option("--box", type=click.IntRange(min=0), default=DEFAULT_VERIFY_BOX, show_default=True,
              help="Region for the point oracle (unique-factorization complex fields only).")
@guarded
def verify(radicand, discriminant, limit, box):
    """Exit 0 when every oracle agrees, 1 with witnesses otherwise."""
    f, note = resolve_field(radicand, discriminant)
    if note:
        click.echo(note)

    report = verify_field(f, limit, box)
    for check, count in report.compared.items():
        click.echo(f"{check}: {count} compared")

    if report.ok:
        click.echo(f"OK {field_name(f)} d={f.d} max={limit}")
        return

    for mismatch in report.mismatches[:MAX_WITNESSES]:
        click.echo(f"MISMATCH {mismatch.check}: {mismatch.witness}")
    click.echo(f"FAILED {field_name(f)} d={f.d}: {len(report.mismatches)} mismatches")
    raise click.exceptions.Exit(EXIT_MISMATCH)
