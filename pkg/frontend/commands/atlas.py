"""
The `atlas` subcommand: classify a lattice region and render it as SVG or text.
"""
import logging
from pathlib import Path
from typing import Optional, Tuple

import click

from backend.atlas import Region, enumerate_atlas, region_max_norm
from backend.field import FieldParams
from backend.ideals import IdealSpec, find_ideal, require_valid
from backend.render import RenderConfig, render_svg, render_text
from backend.sieve import NormSet, sieve_norms_odd
from frontend.config.constants import ATLAS_FORMATS
from frontend.utils.options import RunConfig, field_options, guarded, load_render_config, resolve_field

logger = logging.getLogger(__name__)


def sieve_bound(f: FieldParams, region: Region, requested: Optional[int]) -> int:
    """The explicit --max, or the largest norm in the region (at least 2)."""
    if requested is not None:
        return requested
    return max(region_max_norm(f, region), 2)


def build_document(
    f: FieldParams,
    region: Region,
    limit: int,
    ideal: Optional[IdealSpec],
    fmt: str,
    render_config: RenderConfig,
    norm_set: Optional[NormSet] = None,
) -> Tuple[str, NormSet]:
    """Sieve, classify and render; returns the document and the norm set used."""
    if ideal is not None:
        require_valid(f, ideal)
    if norm_set is None:
        norm_set = sieve_norms_odd(f, limit)
    atlas = enumerate_atlas(f, region, norm_set, ideal)
    if fmt == "text":
        return render_text(atlas, f) + "\n", norm_set
    return render_svg(atlas, f, render_config, ideal), norm_set


@click.command()
@field_options
@click.option("--max", "limit", type=int, default=None, help="Sieve bound (default: largest norm in the region).")
@click.option("--box", type=int, default=None, help="Symmetric region |x|, |y| <= N.")
@click.option("--xmin", type=int, default=None)
@click.option("--xmax", type=int, default=None)
@click.option("--ymin", type=int, default=None)
@click.option("--ymax", type=int, default=None)
@click.option("--ideal-norm", type=int, default=None, help="Norm m of the prime ideal I = [m, shift + τ].")
@click.option("--ideal-shift", type=int, default=None, help="Shift of I.")
@click.option("--ideal-auto", is_flag=True, help="Use the smallest valid ideal over a split prime.")
@click.option("--format", "fmt", type=click.Choice(ATLAS_FORMATS), default=None, help="Inferred from -o when omitted.")
@click.option("-o", "--output", type=click.Path(dir_okay=False, writable=True), default=None)
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False), default=None,
              help="key=value file with SVG styling.")
@click.option("--cell-size", type=float, default=None, help="Overrides cell_size from --config.")
@click.option("--width", type=int, default=None, help="Character row width in the header.")
@guarded
def atlas(radicand, discriminant, limit, box, xmin, xmax, ymin, ymax, ideal_norm, ideal_shift, ideal_auto,
          fmt, output, config_path, cell_size, width):
    """Render units, primes and prime-ideal points of a lattice region."""
    run = RunConfig(
        radicand=radicand,
        discriminant=discriminant,
        max=limit,
        box=box,
        xmin=xmin,
        xmax=xmax,
        ymin=ymin,
        ymax=ymax,
        ideal_norm=ideal_norm,
        ideal_shift=ideal_shift,
        ideal_auto=ideal_auto,
        output=output,
        format=fmt,
    )
    render_config = load_render_config(config_path, {"cell_size": cell_size, "character_row_width": width})
    f, note = resolve_field(run.radicand, run.discriminant)
    region = run.region()
    ideal = find_ideal(f) if run.ideal_auto else run.ideal()
    bound = sieve_bound(f, region, run.max)

    document, _ = build_document(f, region, bound, ideal, run.output_format(), render_config)

    # Run details go to stderr when the document itself is on stdout
    to_stderr = output is None
    if note:
        click.echo(note, err=to_stderr)
    click.echo(f"sieve bound: {bound}", err=to_stderr)
    if ideal is not None:
        click.echo(f"ideal: {ideal} (norm {ideal.m}, shift {ideal.shift})", err=to_stderr)

    if output is None:
        click.echo(document, nl=False)
    else:
        Path(output).write_text(document, encoding="utf-8")
        logger.info(f"Wrote {run.output_format()} atlas to {output}")
