"""
The `gallery` subcommand: one atlas per field of a catalog group.
"""
import logging
from pathlib import Path

import click

from backend.atlas import Region
from backend.catalog import CATALOG, IDEAL_GROUPS, class_number_hint
from backend.field import field_name, make_field
from backend.ideals import find_ideal
from frontend.commands.atlas import build_document, sieve_bound
from frontend.config.constants import ATLAS_FORMATS, DEFAULT_GALLERY_BOX, EXTENSIONS
from frontend.utils.options import guarded, load_render_config

logger = logging.getLogger(__name__)


@click.command()
@click.argument("group", type=click.Choice(sorted(CATALOG)))
@click.option("-o", "--output", "out_dir", type=click.Path(file_okay=False), required=True, help="Output directory.")
@click.option("--box", type=click.IntRange(min=0), default=DEFAULT_GALLERY_BOX, show_default=True)
@click.option("--format", "fmt", type=click.Choice(ATLAS_FORMATS), default="svg", show_default=True)
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False), default=None)
@guarded
def gallery(group, out_dir, box, fmt, config_path):
    """Render every field of GROUP into the output directory."""
    directory = Path(out_dir)
    directory.mkdir(parents=True, exist_ok=True)
    render_config = load_render_config(config_path, {})
    region = Region.box(box)

    for r in CATALOG[group]:
        f = make_field(r)
        ideal = find_ideal(f) if group in IDEAL_GROUPS else None
        document, _ = build_document(f, region, sieve_bound(f, region, None), ideal, fmt, render_config)
        path = directory / f"r{r}{EXTENSIONS[fmt]}"
        path.write_text(document, encoding="utf-8")

        hint = class_number_hint(r)
        line = f"{path.name}\t{field_name(f)}\td={f.d}"
        if hint is not None:
            line += f"\th={hint}"
        if ideal is not None:
            line += f"\tI={ideal}"
        click.echo(line)

    logger.info(f"Rendered {len(CATALOG[group])} atlases of {group} into {directory}")
