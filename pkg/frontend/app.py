"""
Command-line front end for quadprime.
One module per subcommand under frontend/commands.
"""
import logging

import click

from backend.settings import get_settings

# Import commands
from frontend.commands.atlas import atlas
from frontend.commands.character import character
from frontend.commands.classify import classify
from frontend.commands.gallery import gallery
from frontend.commands.sieve import sieve
from frontend.commands.verify import verify
from frontend.utils.options import guarded

logger = logging.getLogger(__name__)


@click.group()
@click.option("-v", "--verbose", is_flag=True, help="Log progress to stderr.")
@guarded
def cli(verbose: bool) -> None:
    """Quadratic characters, prime-ideal norms and prime atlases of quadratic fields."""
    level = logging.INFO if verbose else get_settings().log_level
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger().setLevel(level)


cli.add_command(character)
cli.add_command(sieve)
cli.add_command(classify)
cli.add_command(atlas)
cli.add_command(verify)
cli.add_command(gallery)


def main() -> None:
    """Main entry point."""
    cli()


if __name__ == "__main__":
    main()
