"""
The quadratic field Q(√r) and its ring of integers Z[τ].

Elements are stored as integer coordinates (x, y) meaning x + yτ, with
τ = √r when r ≡ 2, 3 (mod 4) and τ = (1 + √r)/2 when r ≡ 1 (mod 4).
"""
import logging
from dataclasses import dataclass
from typing import Optional

from .arithmetic import factorize, prime_factors, squarefree_reduce
from .errors import DomainError, InvalidRadicandError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FieldParams:
    """Constants of Q(√r): radicand, discriminant, basis kind and norm coefficient."""

    r: int
    d: int
    half_basis: bool
    c: Optional[int] = None

    @property
    def trace_tau(self) -> int:
        """τ + conj(τ): 1 for the half basis, 0 otherwise (equals d mod 2)."""
        return 1 if self.half_basis else 0

    @property
    def is_complex(self) -> bool:
        return self.r < 0


@dataclass(frozen=True)
class RingElement:
    """x + yτ in Z[τ]."""

    x: int
    y: int

    def __add__(self, other: "RingElement") -> "RingElement":
        return RingElement(self.x + other.x, self.y + other.y)

    def __neg__(self) -> "RingElement":
        return RingElement(-self.x, -self.y)

    def __sub__(self, other: "RingElement") -> "RingElement":
        return RingElement(self.x - other.x, self.y - other.y)


ONE = RingElement(1, 0)
ZERO = RingElement(0, 0)


def _params_for_squarefree(r: int) -> FieldParams:
    if r % 4 == 1:
        return FieldParams(r=r, d=r, half_basis=True, c=(r - 1) // 4)
    return FieldParams(r=r, d=4 * r, half_basis=False)


def make_field(n: int) -> FieldParams:
    """Build the field Q(√n), silently removing square factors from n."""
    if n == 0:
        raise InvalidRadicandError("Radicand must be non-zero")
    r, s = squarefree_reduce(n)
    if r == 1:
        raise InvalidRadicandError(f"Radicand {n} is a perfect square")
    if s != 1:
        logger.info(f"Reduced radicand {n} = {r} * {s}^2")
    return _params_for_squarefree(r)


def field_from_discriminant(d: int) -> FieldParams:
    """Build the field whose discriminant is d; d must be fundamental."""
    if d % 4 == 1:
        r = d
    elif d % 4 == 0 and (d // 4) % 4 in (2, 3):
        r = d // 4
    else:
        raise InvalidRadicandError(f"{d} is not a fundamental discriminant")
    if r in (0, 1) or any(exponent > 1 for _, exponent in factorize(r)):
        raise InvalidRadicandError(f"{d} is not a fundamental discriminant")
    return _params_for_squarefree(r)


def field_name(f: FieldParams) -> str:
    return f"Q(√{f.r})"


def norm_form(f: FieldParams, x: int, y: int) -> int:
    """Signed norm x² - r y² (whole basis) or x² + xy - c y² (half basis)."""
    if f.half_basis:
        return x * x + x * y - f.c * y * y
    return x * x - f.r * y * y


def norm(f: FieldParams, zeta: RingElement) -> int:
    """Absolute norm N(ζ) = |ζ · conj(ζ)|."""
    return abs(norm_form(f, zeta.x, zeta.y))


def multiply(f: FieldParams, alpha: RingElement, beta: RingElement) -> RingElement:
    """Product in Z[τ], using τ² = r or τ² = τ + c."""
    a, b = alpha.x, alpha.y
    u, v = beta.x, beta.y
    if f.half_basis:
        return RingElement(a * u + b * v * f.c, a * v + b * u + b * v)
    return RingElement(a * u + b * v * f.r, a * v + b * u)


def conjugate(f: FieldParams, zeta: RingElement) -> RingElement:
    if f.half_basis:
        return RingElement(zeta.x + zeta.y, -zeta.y)
    return RingElement(zeta.x, -zeta.y)


def is_unit(f: FieldParams, zeta: RingElement) -> bool:
    return norm(f, zeta) == 1


def divides(f: FieldParams, alpha: RingElement, zeta: RingElement) -> bool:
    """True when zeta / alpha lies in Z[τ]; alpha must be non-zero."""
    n = norm(f, alpha)
    if n == 0:
        raise DomainError("Division by zero element")
    product = multiply(f, zeta, conjugate(f, alpha))
    return product.x % n == 0 and product.y % n == 0


def ufd_candidate_real(r: int) -> bool:
    """Necessary condition for a real quadratic field to have unique factorization.

    r must be prime, or r = pq with p ≡ 3 (mod 4) and q = 2 or q ≡ 3 (mod 4).
    """
    if r <= 1:
        raise DomainError(f"Radicand {r} must be greater than 1")
    factors = factorize(r)
    if any(exponent > 1 for _, exponent in factors):
        raise DomainError(f"Radicand {r} is not squarefree")

    primes = prime_factors(r)
    if len(primes) == 1:
        return True
    if len(primes) != 2:
        return False

    def allowed(p: int, q: int) -> bool:
        return p % 4 == 3 and (q == 2 or q % 4 == 3)

    p, q = primes
    return allowed(p, q) or allowed(q, p)
