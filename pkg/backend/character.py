"""
Quadratic character χ_d(x) = (d/x) of a quadratic field, tabulated over one period.

The table is assembled multiplicatively: one residue table per odd prime
factor p of the radicand (0 at 0, +1 on the non-zero squares mod p, -1
elsewhere) and, when d ≡ 0 (mod 4), one of the fixed tables for
e = -4, +8 or -8.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict

import numpy as np

from .arithmetic import prime_factors
from .errors import DomainError, SieveLimitError
from .field import FieldParams

logger = logging.getLogger(__name__)

MAX_PERIOD = 2**31 - 1

# Characters of the even part e of d = e * prod(p'), keyed by e
E_TABLES: Dict[int, tuple] = {
    -4: (0, +1, 0, -1),
    +8: (0, +1, 0, -1, 0, -1, 0, +1),
    -8: (0, +1, 0, +1, 0, -1, 0, -1),
}


@dataclass(frozen=True, eq=False)
class CharacterTable:
    """χ_d over one period; values[x] for 0 <= x < period."""

    d: int
    period: int
    values: np.ndarray

    def __len__(self) -> int:
        return self.period

    def symbols(self, width: int) -> str:
        """First `width` values as a row of '+', '-' and '0'."""
        return "".join("+" if v > 0 else "-" if v < 0 else "0" for v in self.values[:width].tolist())


def even_part(f: FieldParams) -> int:
    """The factor e of d = e * prod(p'); only defined when d ≡ 0 (mod 4)."""
    if f.half_basis:
        raise DomainError(f"d = {f.d} has no even part")
    if f.r % 4 == 3:
        return -4
    return 8 if f.r % 8 == 2 else -8


def _residue_table(p: int) -> np.ndarray:
    table = np.full(p, -1, dtype=np.int8)
    table[0] = 0
    squares = np.arange(1, p, dtype=np.int64)
    table[(squares * squares) % p] = 1
    return table


def build_character(f: FieldParams) -> CharacterTable:
    """Tabulate χ_d for 0 <= x < |d|."""
    period = abs(f.d)
    if period > MAX_PERIOD:
        raise SieveLimitError(f"Character period {period} exceeds {MAX_PERIOD}")

    index = np.arange(period, dtype=np.int64)
    values = np.ones(period, dtype=np.int8)

    if not f.half_basis:
        e_table = np.array(E_TABLES[even_part(f)], dtype=np.int8)
        values *= e_table[index % len(e_table)]

    for p in prime_factors(f.r):
        if p == 2:
            continue
        values *= _residue_table(p)[index % p]

    values.flags.writeable = False
    logger.info(f"Built quadratic character for d={f.d}, period {period}")
    return CharacterTable(d=f.d, period=period, values=values)


def chi(table: CharacterTable, x: int) -> int:
    """Evaluate the character at any integer, using periodicity and (anti-)symmetry."""
    if x >= 0:
        return int(table.values[x % table.period])
    value = int(table.values[(-x) % table.period])
    return -value if table.d < 0 else value


def odd_character(f: FieldParams) -> CharacterTable:
    """Character of odd numbers for odd d, period 2|d|; even entries are 0."""
    if not f.half_basis:
        raise DomainError(f"Odd character needs an odd discriminant, got d = {f.d}")
    base = build_character(f)
    if 2 * base.period > MAX_PERIOD:
        raise SieveLimitError(f"Character period {2 * base.period} exceeds {MAX_PERIOD}")
    values = np.tile(base.values, 2)
    values[0::2] = 0
    values.flags.writeable = False
    return CharacterTable(d=f.d, period=2 * base.period, values=values)


def density(f: FieldParams) -> Fraction:
    """Fraction of a period with χ = +1, i.e. φ(|d|) / (2|d|)."""
    table = build_character(f)
    positives = int(np.count_nonzero(table.values == 1))
    return Fraction(positives, table.period)
