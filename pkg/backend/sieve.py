"""
Sieve for the norms of prime ideals in the ring of integers of a quadratic field.

The starting set S(d, max) holds the prime divisors of d and every n in
[2, max] with χ_d(n) = +1. Each untreated t of the running set T with
χ_d(t) = +1 removes the products t*s (s in S, s >= t); the sieve stops once
t exceeds √max. What remains is every prime p with χ_d(p) >= 0, every p²
with χ_d(p) = -1, and every pq of distinct primes with χ_d(p) = χ_d(q) = -1.
The last kind is never the norm of an ideal, so keeping it is harmless.

A prime divisor of d never needs to act as a sieving base: t*p with p | d
has character 0 and is therefore never in S.
"""
import logging
import struct
from dataclasses import dataclass
from enum import Enum
from math import isqrt, log
from typing import Dict, Iterator, List, Sequence

import numpy as np

from .arithmetic import is_prime, kronecker, prime_factors
from .character import build_character, chi, density, odd_character
from .errors import CacheFormatError, DomainError, OutOfRangeError, SieveLimitError
from .field import FieldParams
from .settings import get_settings

logger = logging.getLogger(__name__)

MAX_SIEVE_LIMIT = 2**40
MAGIC = b"QNS1"
_HEADER = struct.Struct("<4sqQQ")


class SplitType(str, Enum):
    """How a rational prime p behaves in Z[τ]."""

    SPLIT = "split"
    RAMIFIED = "ramified"
    INERT = "inert"


def _bitset_bytes(limit: int) -> int:
    # whole 64-bit words covering bits 0..limit
    return (limit // 64 + 1) * 8


@dataclass(frozen=True, eq=False)
class NormSet:
    """Members of T(d, max) as a little-endian bitset: bit n is set iff n is in T."""

    d: int
    max: int
    bits: np.ndarray
    steps: int = 0

    @classmethod
    def from_mask(cls, d: int, limit: int, mask: np.ndarray, steps: int = 0) -> "NormSet":
        """Pack a boolean array indexed 0..limit."""
        padded = np.zeros(_bitset_bytes(limit) * 8, dtype=bool)
        padded[: limit + 1] = mask[: limit + 1]
        padded[:2] = False
        bits = np.packbits(padded, bitorder="little")
        bits.flags.writeable = False
        return cls(d=d, max=limit, bits=bits, steps=steps)

    @classmethod
    def from_members(cls, d: int, limit: int, members: Sequence[int]) -> "NormSet":
        mask = np.zeros(limit + 1, dtype=bool)
        mask[np.asarray(list(members), dtype=np.int64)] = True
        return cls.from_mask(d, limit, mask)

    def mask(self) -> np.ndarray:
        return np.unpackbits(self.bits, bitorder="little")[: self.max + 1].astype(bool)

    def members(self) -> np.ndarray:
        return np.flatnonzero(self.mask())

    def __contains__(self, n: int) -> bool:
        if n < 0 or n > self.max:
            return False
        return bool((int(self.bits[n >> 3]) >> (n & 7)) & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members().tolist())

    def __len__(self) -> int:
        return int(np.unpackbits(self.bits).sum())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NormSet):
            return NotImplemented
        return self.d == other.d and self.max == other.max and np.array_equal(self.bits, other.bits)

    __hash__ = None


def _check_limits(limit: int, estimate: int) -> None:
    if limit < 2:
        raise DomainError(f"Sieve bound must be at least 2, got {limit}")
    if limit > MAX_SIEVE_LIMIT:
        raise SieveLimitError(f"Sieve bound {limit} exceeds the supported maximum {MAX_SIEVE_LIMIT}")
    cap = get_settings().max_memory
    if estimate > cap:
        raise SieveLimitError(
            f"Sieve to {limit} needs about {estimate} bytes, above QUADPRIME_MAX_MEMORY={cap}"
        )


def starting_set(f: FieldParams, limit: int) -> np.ndarray:
    """S(d, max): prime divisors of d and all n in [2, max] with χ_d(n) = +1, sorted."""
    _check_limits(limit, 10 * (limit + 1) + 16 * abs(f.d))
    table = build_character(f)
    numbers = np.arange(limit + 1, dtype=np.int64)
    mask = table.values[numbers % table.period] == 1
    for p in prime_factors(f.d):
        if p <= limit:
            mask[p] = True
    mask[:2] = False
    return np.flatnonzero(mask)


def sieve_norms(starting: np.ndarray, f: FieldParams, limit: int) -> NormSet:
    """Run the sieve over every number in [2, max]; the reference construction."""
    _check_limits(limit, 2 * (limit + 1) + 16 * abs(f.d))
    table = build_character(f)

    in_start = np.zeros(limit + 1, dtype=bool)
    in_start[np.asarray(starting, dtype=np.int64)] = True
    remaining = in_start.copy()

    steps = 0
    for t in range(2, isqrt(limit) + 1):
        if not remaining[t] or chi(table, t) != 1:
            continue
        partners = np.flatnonzero(in_start[t : limit // t + 1]) + t
        remaining[t * partners] = False
        steps += int(partners.size)

    logger.info(f"Sieved d={f.d} to {limit} with {steps} removal steps")
    return NormSet.from_mask(f.d, limit, remaining, steps)


def even_prime_norms(f: FieldParams, limit: int) -> List[int]:
    """Prime-ideal norms contributed by 2: ramified 2, split 2 or inert 4."""
    if f.d % 2 == 0 or f.d % 8 == 1:
        norms = [2]
    else:
        norms = [4]
    return [n for n in norms if n <= limit]


def _odd_primes_upto(n: int) -> np.ndarray:
    if n < 3:
        return np.empty(0, dtype=np.int64)
    mask = np.ones(n + 1, dtype=bool)
    mask[:2] = False
    mask[4::2] = False
    for p in range(3, isqrt(n) + 1, 2):
        if mask[p]:
            mask[p * p :: 2 * p] = False
    primes = np.flatnonzero(mask)
    return primes[primes > 2]


def _in_starting_set(numbers: np.ndarray, values: np.ndarray, period: int, divisors: np.ndarray) -> np.ndarray:
    selected = values[numbers % period] == 1
    if divisors.size:
        selected |= np.isin(numbers, divisors)
    return selected


def _sieving_bases(f: FieldParams, limit: int) -> List[int]:
    """Odd t in T with χ_d(t) = +1 and t² <= max."""
    root = isqrt(limit)
    if root < 3:
        return []
    small = sieve_norms(starting_set(f, root), f, root)
    return [t for t in small if t % 2 and kronecker(f.d, t) == 1]


def _mark_inert_doubles(bits: np.ndarray, values: np.ndarray, period: int, limit: int, segment: int) -> None:
    # 2q for every inert odd prime q, present in T only when 2 is inert
    half = limit // 2
    base_primes = _odd_primes_upto(isqrt(half))
    for lo in range(0, half + 1, segment):
        hi = min(lo + segment, half + 1)
        odd = np.arange(lo + 1, hi, 2, dtype=np.int64)
        if odd.size == 0:
            continue
        prime = odd >= 3
        for p in base_primes.tolist():
            if p * p > hi - 1:
                break
            start = max(p * p, -(-lo // p) * p)
            if start % 2 == 0:
                start += p
            prime[(start - lo - 1) // 2 :: p] = False
        doubled = 2 * odd[prime & (values[odd % period] == -1)]
        np.bitwise_or.at(bits, doubled >> 3, (1 << (doubled & 7)).astype(np.uint8))


def sieve_norms_odd(f: FieldParams, limit: int) -> NormSet:
    """The sieve restricted to odd numbers, run segment by segment, plus the even norms.

    Produces exactly the set of sieve_norms(starting_set(f, max), f, max) while
    holding only the packed result, one segment and one character period.
    """
    settings = get_settings()
    segment = min(settings.segment_size, (limit // 64 + 1) * 64)
    estimate = _bitset_bytes(limit) + 12 * segment + 32 * abs(f.d)
    _check_limits(limit, estimate)

    table = odd_character(f) if f.half_basis else build_character(f)
    values, period = table.values, table.period
    divisors = np.array([p for p in prime_factors(f.d) if p != 2], dtype=np.int64)
    bases = _sieving_bases(f, limit)

    bits = np.zeros(_bitset_bytes(limit), dtype=np.uint8)
    steps = 0
    for lo in range(0, limit + 1, segment):
        hi = min(lo + segment, limit + 1)
        odd = np.arange(lo + 1, hi, 2, dtype=np.int64)
        keep = _in_starting_set(odd, values, period, divisors) & (odd >= 3)

        for t in bases:
            if t * t > hi - 1:
                break
            first = max(t, -(-lo // t))
            last = (hi - 1) // t
            if first % 2 == 0:
                first += 1
            if first > last:
                continue
            partners = np.arange(first, last + 1, 2, dtype=np.int64)
            partners = partners[_in_starting_set(partners, values, period, divisors)]
            keep[(t * partners - lo - 1) // 2] = False
            steps += int(partners.size)

        window = np.zeros(-(-(hi - lo) // 8) * 8, dtype=bool)
        window[1 : hi - lo : 2] = keep
        packed = np.packbits(window, bitorder="little")
        bits[lo // 8 : lo // 8 + packed.size] |= packed

    for n in even_prime_norms(f, limit):
        bits[n >> 3] |= np.uint8(1 << (n & 7))
    if f.d % 8 == 5:
        _mark_inert_doubles(bits, values, period, limit, segment)

    bits.flags.writeable = False
    logger.info(f"Odd-only sieve for d={f.d} to {limit}: {len(bases)} bases, {steps} removal steps")
    return NormSet(d=f.d, max=limit, bits=bits, steps=steps)


def classify_prime(f: FieldParams, p: int) -> SplitType:
    """Split, ramified or inert according to χ_d(p) = +1, 0, -1."""
    if not is_prime(p):
        raise DomainError(f"{p} is not a prime")
    value = kronecker(f.d, p)
    if value == 1:
        return SplitType.SPLIT
    if value == 0:
        return SplitType.RAMIFIED
    return SplitType.INERT


def is_prime_norm(norm_set: NormSet, n: int) -> bool:
    """Membership in T; refuses to answer beyond the sieve bound."""
    if n < 0:
        raise DomainError(f"Norms are non-negative, got {n}")
    if n > norm_set.max:
        raise OutOfRangeError(f"{n} exceeds the sieve bound {norm_set.max}")
    return n in norm_set


def model_operations(f: FieldParams, limit: int) -> float:
    """ρ · max · log log max, the asymptotic operation count of the sieve."""
    return float(density(f)) * limit * log(log(limit))


def summarize(norm_set: NormSet) -> Dict[str, int]:
    """Count members by kind: split, ramified, inert squares and inert products."""
    members = norm_set.members()
    primes = np.zeros(norm_set.max + 1, dtype=bool)
    primes[_odd_primes_upto(norm_set.max)] = True
    if norm_set.max >= 2:
        primes[2] = True

    counts = {"split": 0, "ramified": 0, "inert_square": 0, "inert_product": 0}
    for n in members.tolist():
        if primes[n]:
            kind = "ramified" if norm_set.d % n == 0 else "split"
        else:
            root = isqrt(n)
            kind = "inert_square" if root * root == n and primes[root] else "inert_product"
        counts[kind] += 1
    return counts


def dump_norm_set(norm_set: NormSet) -> bytes:
    """Serialize as QNS1: magic, d, max, word count, then little-endian 64-bit words."""
    words = norm_set.bits.size // 8
    return _HEADER.pack(MAGIC, norm_set.d, norm_set.max, words) + norm_set.bits.tobytes()


def load_norm_set(data: bytes) -> NormSet:
    if len(data) < _HEADER.size:
        raise CacheFormatError("Norm-set dump is truncated")
    magic, d, limit, words = _HEADER.unpack_from(data)
    if magic != MAGIC:
        raise CacheFormatError(f"Bad magic bytes {magic!r}")
    payload = data[_HEADER.size :]
    if len(payload) != words * 8 or words * 8 != _bitset_bytes(limit):
        raise CacheFormatError(f"Expected {_bitset_bytes(limit)} bitset bytes, found {len(payload)}")
    bits = np.frombuffer(payload, dtype=np.uint8).copy()
    bits.flags.writeable = False
    return NormSet(d=d, max=limit, bits=bits)
