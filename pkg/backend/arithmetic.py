"""
Exact integer utilities: factorization, squarefree reduction and the
Legendre-Jacobi-Kronecker symbol.
"""
import logging
from math import isqrt, prod
from typing import List, Tuple

from .errors import DomainError

logger = logging.getLogger(__name__)

# (a/2) indexed by a mod 8
_KRONECKER_TWO = (0, 1, 0, -1, 0, -1, 0, 1)

Factorization = List[Tuple[int, int]]


def factorize(n: int) -> Factorization:
    """Factor |n| by trial division into (prime, exponent) pairs, primes increasing."""
    if n == 0:
        raise DomainError("Cannot factorize 0")

    n = abs(n)
    factors: Factorization = []

    exponent = 0
    while n % 2 == 0:
        n //= 2
        exponent += 1
    if exponent:
        factors.append((2, exponent))

    divisor = 3
    while divisor * divisor <= n:
        exponent = 0
        while n % divisor == 0:
            n //= divisor
            exponent += 1
        if exponent:
            factors.append((divisor, exponent))
        divisor += 2

    if n > 1:
        factors.append((n, 1))
    return factors


def multiply_out(factors: Factorization) -> int:
    """Recombine a factorization into the integer it describes."""
    return prod(prime ** exponent for prime, exponent in factors)


def prime_factors(n: int) -> List[int]:
    """Distinct prime factors of |n|, increasing."""
    return [prime for prime, _ in factorize(n)]


def is_prime(n: int) -> bool:
    """Deterministic primality by trial division."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for divisor in range(3, isqrt(n) + 1, 2):
        if n % divisor == 0:
            return False
    return True


def is_squarefree(n: int) -> bool:
    """True when no prime square divides n (n != 0)."""
    return all(exponent == 1 for _, exponent in factorize(n))


def squarefree_reduce(n: int) -> Tuple[int, int]:
    """Write n = r * s**2 with r squarefree and sign(r) = sign(n); return (r, s)."""
    if n == 0:
        raise DomainError("Cannot reduce 0 to a squarefree number")

    r, s = 1, 1
    for prime, exponent in factorize(n):
        r *= prime ** (exponent % 2)
        s *= prime ** (exponent // 2)
    if n < 0:
        r = -r
    return r, s


def kronecker(a: int, b: int) -> int:
    """Legendre-Jacobi-Kronecker symbol (a/b), defined for every pair of integers.

    Binary reduction: factors of two are stripped with the (a/2) rule and the
    remaining odd pair is swapped using quadratic reciprocity.
    """
    if b == 0:
        return 1 if abs(a) == 1 else 0
    if a % 2 == 0 and b % 2 == 0:
        return 0

    twos = 0
    while b % 2 == 0:
        b //= 2
        twos += 1
    k = _KRONECKER_TWO[a & 7] if twos % 2 else 1

    if b < 0:
        b = -b
        if a < 0:
            k = -k

    # b is odd and positive from here on
    while a != 0:
        twos = 0
        while a % 2 == 0:
            a //= 2
            twos += 1
        if twos % 2:
            k *= _KRONECKER_TWO[b & 7]
        if a & b & 2:
            k = -k
        r = abs(a)
        a = b % r
        b = r

    return k if b == 1 else 0
