"""
Prime ideals I = [m, shift + τ] of Z[τ] given by their norm m and a shift.

[m, shift + τ] is the Z-module spanned by m and shift + τ. It is an ideal
of norm m exactly when m divides N(shift + τ); an element x + yτ lies in it
iff x ≡ shift·y (mod m).
"""
import logging
from dataclasses import dataclass
from enum import Enum
from itertools import product
from math import isqrt
from typing import Optional

from .arithmetic import is_prime, kronecker
from .errors import InvalidIdealError, OutOfRangeError
from .field import FieldParams, RingElement, norm, norm_form
from .sieve import NormSet, SplitType, classify_prime, is_prime_norm

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IdealSpec:
    """The ideal [m, shift + τ]."""

    m: int
    shift: int

    def __str__(self) -> str:
        return f"[{self.m}, {self.shift} + τ]"


class IdealClass(str, Enum):
    I = "I"
    CONJ_I = "J"


def generator(spec: IdealSpec) -> RingElement:
    return RingElement(spec.shift, 1)


def validate_ideal(f: FieldParams, spec: IdealSpec) -> bool:
    """True iff [m, shift + τ] is a prime ideal of norm m."""
    if spec.m < 2 or not 0 <= spec.shift < spec.m or not is_prime(spec.m):
        return False
    if norm(f, generator(spec)) % spec.m:
        return False
    return classify_prime(f, spec.m) != SplitType.INERT


def explain_invalid(f: FieldParams, spec: IdealSpec) -> str:
    """Human-readable reason why validate_ideal rejects spec."""
    if spec.m < 2 or not is_prime(spec.m):
        return f"norm {spec.m} is not a prime"
    if not 0 <= spec.shift < spec.m:
        return f"shift {spec.shift} is outside [0, {spec.m})"
    generator_norm = norm(f, generator(spec))
    if generator_norm % spec.m:
        return f"{spec.m} does not divide N({spec.shift} + τ) = {generator_norm}"
    return f"{spec.m} is inert, so no prime ideal has norm {spec.m}"


def require_valid(f: FieldParams, spec: IdealSpec) -> None:
    if not validate_ideal(f, spec):
        reason = explain_invalid(f, spec)
        logger.error(f"Rejected ideal {spec}: {reason}")
        raise InvalidIdealError(f"Invalid ideal {spec}: {reason}")


def contains(f: FieldParams, spec: IdealSpec, zeta: RingElement) -> bool:
    require_valid(f, spec)
    return (zeta.x - spec.shift * zeta.y) % spec.m == 0


def conjugate_ideal(f: FieldParams, spec: IdealSpec) -> IdealSpec:
    """The conjugate ideal: conj(shift + τ) = shift + tr(τ) - τ, negated and reduced mod m."""
    require_valid(f, spec)
    return IdealSpec(m=spec.m, shift=(-spec.shift - f.trace_tau) % spec.m)


def ideal_display_class(
    f: FieldParams,
    spec: IdealSpec,
    norm_set: NormSet,
    zeta: RingElement,
) -> Optional[IdealClass]:
    """Which conjugate class ζ represents: its norm must be m times a prime-ideal norm.

    Self-conjugate ideals report IdealClass.I for both memberships.
    """
    require_valid(f, spec)
    value = norm(f, zeta)
    if value == 0 or value % spec.m:
        return None
    quotient = value // spec.m
    if quotient > norm_set.max:
        raise OutOfRangeError(f"Norm quotient {quotient} exceeds the sieve bound {norm_set.max}")
    if not is_prime_norm(norm_set, quotient):
        return None
    if contains(f, spec, zeta):
        return IdealClass.I
    if contains(f, conjugate_ideal(f, spec), zeta):
        return IdealClass.CONJ_I
    return None


def _is_element_norm(f: FieldParams, m: int) -> bool:
    # only meaningful for complex fields, where the norm form is definite
    bound = isqrt(4 * m) + 1
    return any(
        norm_form(f, x, y) == m for x, y in product(range(-bound, bound + 1), range(0, bound + 1))
    )


def find_ideal(f: FieldParams, search_limit: Optional[int] = None) -> IdealSpec:
    """Smallest valid ideal over a split prime.

    For complex fields, split primes that are norms of elements give principal
    ideals and are skipped; if none remains within the search limit the
    smallest split-prime ideal is returned instead.
    """
    limit = search_limit or max(100, 10 * isqrt(abs(f.d)))
    fallback: Optional[IdealSpec] = None
    for m in range(2, limit + 1):
        if not is_prime(m) or kronecker(f.d, m) != 1:
            continue
        spec = next(
            (IdealSpec(m, shift) for shift in range(m) if norm_form(f, shift, 1) % m == 0),
            None,
        )
        if spec is None:
            continue
        if fallback is None:
            fallback = spec
        if not f.is_complex or not _is_element_norm(f, m):
            logger.info(f"Selected ideal {spec} for Q(√{f.r})")
            return spec

    if fallback is None:
        raise InvalidIdealError(f"No split prime up to {limit} for Q(√{f.r})")
    logger.warning(f"No non-principal ideal over a split prime up to {limit} for Q(√{f.r}); using {fallback}")
    return fallback
