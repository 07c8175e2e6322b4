"""
Oracle verification runs: compare the fast paths against the brute-force references.
"""
import logging
from dataclasses import dataclass, field
from math import isqrt
from typing import Dict, List, Optional

import numpy as np

from .arithmetic import kronecker
from .atlas import Region, classify_point, region_max_norm
from .catalog import COMPLEX_UFD
from .character import build_character, chi
from .errors import DomainError
from .field import FieldParams
from .oracles import norm_set_oracle, point_class_oracle, small_elements
from .sieve import NormSet, sieve_norms, sieve_norms_odd, starting_set

logger = logging.getLogger(__name__)

VERIFY_LIMIT = 10**6
MAX_WITNESSES = 20


@dataclass
class Mismatch:
    check: str
    witness: str


@dataclass
class VerificationReport:
    f: FieldParams
    limit: int
    compared: Dict[str, int] = field(default_factory=dict)
    mismatches: List[Mismatch] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def verify_character(f: FieldParams) -> List[Mismatch]:
    """χ from the table against the Kronecker symbol for |x| <= 2|d|."""
    table = build_character(f)
    span = 2 * abs(f.d)
    return [
        Mismatch("character", f"x={x}: table {chi(table, x)}, kronecker {kronecker(f.d, x)}")
        for x in range(-span, span + 1)
        if chi(table, x) != kronecker(f.d, x)
    ]


def _diff(check: str, fast: NormSet, reference: NormSet) -> List[Mismatch]:
    fast_mask, reference_mask = fast.mask(), reference.mask()
    extra = np.flatnonzero(fast_mask & ~reference_mask).tolist()
    missing = np.flatnonzero(reference_mask & ~fast_mask).tolist()
    found = [Mismatch(check, f"norm {n}: in sieve output, not in reference") for n in extra]
    found += [Mismatch(check, f"norm {n}: in reference, missing from sieve output") for n in missing]
    return found


def verify_sieve(f: FieldParams, limit: int, norm_set: Optional[NormSet] = None) -> List[Mismatch]:
    """Odd-only sieve against the factorization oracle and the reference sieve."""
    fast = norm_set if norm_set is not None else sieve_norms_odd(f, limit)
    oracle = norm_set_oracle(f, limit)
    reference = sieve_norms(starting_set(f, limit), f, limit)
    return _diff("sieve-vs-factorization", fast, oracle) + _diff("odd-vs-reference", fast, reference)


def verify_points(f: FieldParams, box: int, norm_set: Optional[NormSet] = None) -> List[Mismatch]:
    """Point classification against trial division in a unique-factorization ring."""
    region = Region.box(box)
    bound = max(region_max_norm(f, region), 2)
    fast = norm_set if norm_set is not None and norm_set.max >= bound else sieve_norms_odd(f, bound)
    candidates = small_elements(f, isqrt(bound))
    mismatches = []
    for zeta in region.points():
        got = classify_point(f, fast, zeta)
        expected = point_class_oracle(f, zeta, candidates)
        if got != expected:
            mismatches.append(
                Mismatch("point-vs-irreducibility", f"({zeta.x}, {zeta.y}): {got.value}, oracle {expected.value}")
            )
    return mismatches


def verify_field(f: FieldParams, limit: int, box: int = 20, norm_set: Optional[NormSet] = None) -> VerificationReport:
    """Run every applicable oracle for the field."""
    if limit < 2 or limit > VERIFY_LIMIT:
        raise DomainError(f"Verification bound must lie in [2, {VERIFY_LIMIT}], got {limit}")

    report = VerificationReport(f=f, limit=limit)
    report.mismatches += verify_character(f)
    report.compared["character"] = 4 * abs(f.d) + 1

    report.mismatches += verify_sieve(f, limit, norm_set)
    report.compared["sieve"] = limit - 1

    if f.r in COMPLEX_UFD:
        report.mismatches += verify_points(f, box, norm_set)
        report.compared["points"] = (2 * box + 1) ** 2

    if report.ok:
        logger.info(f"Verification passed for d={f.d}, max={limit}")
    else:
        logger.error(f"Verification found {len(report.mismatches)} mismatches for d={f.d}")
    return report
