from pathlib import Path

import pytest
from click.testing import CliRunner

from backend.field import make_field
from backend.settings import get_settings

GOLDEN_DIR = Path(__file__).parent / "golden"


@pytest.fixture(autouse=True)
def fresh_settings():
    """Settings are cached per process; tests that patch QUADPRIME_* need a reload."""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def gauss():
    return make_field(-1)


@pytest.fixture
def eisenstein():
    return make_field(-3)


@pytest.fixture
def minus_five():
    return make_field(-5)


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def golden_dir():
    return GOLDEN_DIR
