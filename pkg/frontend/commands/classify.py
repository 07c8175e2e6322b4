"""
The `classify` subcommand: how rational primes split in Z[τ].
"""
import logging
from collections import Counter
from typing import List

import click

from backend.arithmetic import is_prime
from backend.sieve import SplitType, classify_prime
from frontend.utils.options import PreconditionError, field_options, guarded, resolve_field

logger = logging.getLogger(__name__)

DEFAULT_UP_TO = 50


def ideal_norms(p: int, split_type: SplitType) -> List[int]:
    """Norms of the prime ideals above p."""
    if split_type == SplitType.SPLIT:
        return [p, p]
    if split_type == SplitType.RAMIFIED:
        return [p]
    return [p * p]


@click.command()
@field_options
@click.option("-p", "--prime", "primes", type=int, multiple=True, help="Prime to classify (repeatable).")
@click.option("--up-to", type=click.IntRange(min=2), default=None, help="Classify every prime up to N.")
@guarded
def classify(radicand, discriminant, primes, up_to):
    """Print split, ramified or inert for each prime, with its prime-ideal norms."""
    f, note = resolve_field(radicand, discriminant)
    if primes and up_to is not None:
        raise PreconditionError("Use either --prime or --up-to, not both")
    if not primes:
        limit = up_to if up_to is not None else DEFAULT_UP_TO
        primes = [p for p in range(2, limit + 1) if is_prime(p)]

    if note:
        click.echo(note)
    counts: Counter = Counter()
    for p in primes:
        split_type = classify_prime(f, p)
        counts[split_type] += 1
        norms = ", ".join(str(n) for n in ideal_norms(p, split_type))
        click.echo(f"{p}\t{split_type.value}\t{norms}")

    click.echo(" ".join(f"{kind.value} {counts[kind]}" for kind in SplitType))
    logger.info(f"Classified {len(primes)} primes for d={f.d}")
