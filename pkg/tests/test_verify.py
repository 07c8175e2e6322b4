import pytest

from backend.errors import DomainError, QuadPrimeError, SieveLimitError
from backend.field import RingElement, make_field
from backend.oracles import (
    is_irreducible,
    is_norm_set_member,
    legendre_by_enumeration,
    norm_set_oracle,
    small_elements,
)
from backend.settings import Settings
from backend.sieve import sieve_norms_odd
from backend.verify import verify_character, verify_field, verify_sieve


def test_legendre_by_enumeration():
    assert [legendre_by_enumeration(a, 7) for a in range(7)] == [0, 1, 1, -1, 1, -1, -1]


@pytest.mark.parametrize("n, expected", [(2, True), (3, False), (9, True), (21, True), (25, False), (45, False), (1, False)])
def test_norm_set_membership_oracle(gauss, n, expected):
    assert is_norm_set_member(gauss, n) == expected


def test_oracle_agrees_with_sieve(gauss):
    assert norm_set_oracle(gauss, 2000) == sieve_norms_odd(gauss, 2000)


def test_small_elements(gauss):
    elements = small_elements(gauss, 2)
    assert set(elements) == {RingElement(1, 1), RingElement(1, -1), RingElement(-1, 1), RingElement(-1, -1)}
    with pytest.raises(DomainError):
        small_elements(make_field(2), 10)


def test_is_irreducible(gauss):
    candidates = small_elements(gauss, 10)
    assert is_irreducible(gauss, RingElement(3, 0), candidates)
    assert is_irreducible(gauss, RingElement(2, 1), candidates)
    assert not is_irreducible(gauss, RingElement(5, 0), candidates)
    assert not is_irreducible(gauss, RingElement(3, 4), candidates)


@pytest.mark.parametrize("r", [-1, -3, -5, 2, 5, 79, -23])
def test_verify_field_small(r):
    report = verify_field(make_field(r), 5000, box=6)
    assert report.ok, report.mismatches[:3]
    assert report.compared["sieve"] == 4999


def test_point_oracle_only_runs_for_unique_factorization():
    assert "points" in verify_field(make_field(-1), 100, box=3).compared
    assert "points" not in verify_field(make_field(-5), 100, box=3).compared


def test_verify_sieve_reports_witnesses(gauss):
    broken = sieve_norms_odd(gauss, 100)
    broken = type(broken).from_members(gauss.d, 100, [n for n in broken if n != 13] + [25])
    mismatches = verify_sieve(gauss, 100, broken)
    witnesses = {m.witness for m in mismatches}
    assert "norm 13: in reference, missing from sieve output" in witnesses
    assert "norm 25: in sieve output, not in reference" in witnesses


def test_verify_character_clean():
    assert verify_character(make_field(-163)) == []


def test_verify_bound():
    with pytest.raises(DomainError):
        verify_field(make_field(-1), 10**6 + 1)


def test_error_hierarchy():
    assert issubclass(SieveLimitError, DomainError)
    assert issubclass(DomainError, QuadPrimeError)
    assert issubclass(DomainError, ValueError)


def test_settings_from_environment(monkeypatch):
    monkeypatch.setenv("QUADPRIME_MAX_MEMORY", "4096")
    monkeypatch.setenv("QUADPRIME_LOG_LEVEL", "info")
    settings = Settings()
    assert settings.max_memory == 4096
    assert settings.log_level == "INFO"


@pytest.mark.parametrize("name, value", [("QUADPRIME_SEGMENT_SIZE", "100"), ("QUADPRIME_LOG_LEVEL", "chatty")])
def test_settings_validation(monkeypatch, name, value):
    monkeypatch.setenv(name, value)
    with pytest.raises(ValueError):
        Settings()
