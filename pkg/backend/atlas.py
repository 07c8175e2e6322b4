"""
Atlas of a rectangular lattice region of Z[τ]: every point classified as
unit, prime, member of a non-principal ideal class, or other.

A point ζ is prime exactly when N(ζ) lies in the norm set T. Element norms
are ideal norms, so the inert products pq kept in T never occur here, and
N(ζ) = p² with p inert forces ζ to be an associate of p, hence prime.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from math import ceil, floor
from typing import Iterable, List, Optional, Tuple

from .errors import DomainError, OutOfRangeError
from .field import FieldParams, RingElement, norm, norm_form
from .ideals import IdealClass, IdealSpec, ideal_display_class, require_valid
from .sieve import NormSet, is_prime_norm

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Region:
    """Inclusive box of τ-coordinates."""

    x_min: int
    x_max: int
    y_min: int
    y_max: int

    def __post_init__(self) -> None:
        if self.x_min > self.x_max or self.y_min > self.y_max:
            raise DomainError(f"Empty region {self}")

    @classmethod
    def box(cls, size: int) -> "Region":
        if size < 0:
            raise DomainError(f"Box size must be non-negative, got {size}")
        return cls(-size, size, -size, size)

    def __contains__(self, zeta: RingElement) -> bool:
        return self.x_min <= zeta.x <= self.x_max and self.y_min <= zeta.y <= self.y_max

    def points(self) -> Iterable[RingElement]:
        """Row-major: y outer ascending, x inner ascending."""
        for y in range(self.y_min, self.y_max + 1):
            for x in range(self.x_min, self.x_max + 1):
                yield RingElement(x, y)


class PointClass(str, Enum):
    UNIT = "unit"
    PRIME = "prime"
    IDEAL_I = "ideal_i"
    IDEAL_CONJ_I = "ideal_j"
    OTHER = "other"


AtlasEntry = Tuple[RingElement, PointClass]

_IDEAL_POINT_CLASS = {
    IdealClass.I: PointClass.IDEAL_I,
    IdealClass.CONJ_I: PointClass.IDEAL_CONJ_I,
}


def classify_point(
    f: FieldParams,
    norm_set: NormSet,
    zeta: RingElement,
    ideal: Optional[IdealSpec] = None,
) -> PointClass:
    value = norm(f, zeta)
    if value == 0:
        return PointClass.OTHER
    if value == 1:
        return PointClass.UNIT
    if value > norm_set.max:
        raise OutOfRangeError(f"N({zeta.x}, {zeta.y}) = {value} exceeds the sieve bound {norm_set.max}")
    if is_prime_norm(norm_set, value):
        return PointClass.PRIME
    if ideal is not None:
        label = ideal_display_class(f, ideal, norm_set, zeta)
        if label is not None:
            return _IDEAL_POINT_CLASS[label]
    return PointClass.OTHER


def _edge_candidates(lo: int, hi: int, vertex: float) -> List[int]:
    candidates = {lo, hi}
    for v in (floor(vertex), ceil(vertex)):
        if lo <= v <= hi:
            candidates.add(v)
    return sorted(candidates)


def region_max_norm(f: FieldParams, region: Region) -> int:
    """Exact maximum of N over the box.

    The signed form is convex in x, and for real fields its negation is convex
    in y, so |form| peaks on the boundary. Along each edge the form is a
    quadratic in one variable, peaking in magnitude at an end or at the
    integers around its vertex.
    """
    best = 0
    for y in (region.y_min, region.y_max):
        vertex = -y / 2 if f.half_basis else 0.0
        for x in _edge_candidates(region.x_min, region.x_max, vertex):
            best = max(best, abs(norm_form(f, x, y)))
    for x in (region.x_min, region.x_max):
        if f.half_basis:
            vertex = x / (2 * f.c)
        else:
            vertex = 0.0
        for y in _edge_candidates(region.y_min, region.y_max, vertex):
            best = max(best, abs(norm_form(f, x, y)))
    return best


def enumerate_atlas(
    f: FieldParams,
    region: Region,
    norm_set: NormSet,
    ideal: Optional[IdealSpec] = None,
) -> List[AtlasEntry]:
    """Classify every lattice point of the region in row-major order."""
    if ideal is not None:
        require_valid(f, ideal)
    atlas = [(zeta, classify_point(f, norm_set, zeta, ideal)) for zeta in region.points()]
    logger.info(f"Classified {len(atlas)} points of {region} for d={f.d}")
    return atlas


def atlas_bounds(atlas: List[AtlasEntry]) -> Optional[Region]:
    if not atlas:
        return None
    xs = [zeta.x for zeta, _ in atlas]
    ys = [zeta.y for zeta, _ in atlas]
    return Region(min(xs), max(xs), min(ys), max(ys))
