"""
The `character` subcommand: one period of χ_d as a row of symbols.
"""
import logging

import click

from backend.character import build_character
from backend.field import field_name
from frontend.config.constants import DEFAULT_WIDTH
from frontend.utils.options import field_options, guarded, resolve_field

logger = logging.getLogger(__name__)


@click.command()
@field_options
@click.option("--width", type=click.IntRange(min=1), default=DEFAULT_WIDTH, show_default=True, help="Symbols to print.")
@guarded
def character(radicand, discriminant, width):
    """Print d and one period of the quadratic character."""
    f, note = resolve_field(radicand, discriminant)
    table = build_character(f)

    click.echo(field_name(f))
    click.echo(f"d={f.d}")
    if note:
        click.echo(note)
    click.echo(table.symbols(width))
    logger.info(f"Printed {min(width, table.period)} of {table.period} character values")
