"""
Exception hierarchy shared by the library and the command-line front end.
"""


class QuadPrimeError(Exception):
    """Base class for every error raised by quadprime."""


class DomainError(QuadPrimeError, ValueError):
    """An argument lies outside the domain of the operation."""


class InvalidRadicandError(DomainError):
    """Zero, a perfect square, or a non-fundamental discriminant was given."""


class InvalidIdealError(DomainError):
    """The pair (norm, shift) does not describe a prime ideal of the field."""


class OutOfRangeError(DomainError):
    """A query exceeds the bound a norm set was sieved to."""


class SieveLimitError(DomainError):
    """A table or sieve would exceed the supported size or the memory cap."""


class CacheFormatError(DomainError):
    """A cached norm-set dump is truncated or has the wrong magic bytes."""
