"""
Slow reference implementations used to cross-check the fast paths.
"""
from itertools import product
from math import isqrt
from typing import List

from .arithmetic import factorize, kronecker
from .atlas import PointClass
from .errors import DomainError
from .field import FieldParams, RingElement, divides, norm
from .sieve import NormSet


def legendre_by_enumeration(a: int, p: int) -> int:
    """(a/p) for an odd prime p by listing the squares mod p."""
    if a % p == 0:
        return 0
    squares = {n * n % p for n in range(1, p)}
    return 1 if a % p in squares else -1


def is_norm_set_member(f: FieldParams, n: int) -> bool:
    """Membership in T decided from the factorization of n."""
    if n < 2:
        return False
    factors = factorize(n)
    if factors == [(n, 1)]:
        return kronecker(f.d, n) >= 0
    if len(factors) == 1 and factors[0][1] == 2:
        return kronecker(f.d, factors[0][0]) == -1
    if len(factors) == 2 and all(exponent == 1 for _, exponent in factors):
        return all(kronecker(f.d, p) == -1 for p, _ in factors)
    return False


def norm_set_oracle(f: FieldParams, limit: int) -> NormSet:
    members = [n for n in range(2, limit + 1) if is_norm_set_member(f, n)]
    return NormSet.from_members(f.d, limit, members)


def small_elements(f: FieldParams, bound: int) -> List[RingElement]:
    """Every element of a complex field with 2 <= N <= bound."""
    if not f.is_complex:
        raise DomainError("Elements of bounded norm are finite only in complex fields")
    reach = isqrt(4 * bound) + 1
    elements = [RingElement(x, y) for x, y in product(range(-reach, reach + 1), repeat=2)]
    return sorted(
        (zeta for zeta in elements if 2 <= norm(f, zeta) <= bound),
        key=lambda zeta: (norm(f, zeta), zeta.x, zeta.y),
    )


def is_irreducible(f: FieldParams, zeta: RingElement, candidates: List[RingElement]) -> bool:
    """No divisor of norm in [2, √N(ζ)] among candidates.

    candidates must cover that norm range, sorted by norm as small_elements returns them.
    """
    value = norm(f, zeta)
    if value < 2:
        return False
    root = isqrt(value)
    for alpha in candidates:
        alpha_norm = norm(f, alpha)
        if alpha_norm > root:
            break
        if value % alpha_norm == 0 and divides(f, alpha, zeta):
            return False
    return True


def point_class_oracle(f: FieldParams, zeta: RingElement, candidates: List[RingElement]) -> PointClass:
    """Unit / Prime / Other for a unique-factorization ring, where irreducible means prime."""
    value = norm(f, zeta)
    if value == 1:
        return PointClass.UNIT
    if is_irreducible(f, zeta, candidates):
        return PointClass.PRIME
    return PointClass.OTHER
