"""
Fixtures compartidos de la suite
"""

import pytest

from app.core.config import Settings, get_settings
from app.gfcore import find_binary_irreducible, find_irreducible
from app.schemas.fields import BinaryField, ExtensionField, PrimeField

SMALL_PRIMES = (3, 5, 7, 11, 13)


@pytest.fixture
def settings() -> Settings:
    return Settings(_env_file=None)


@pytest.fixture(autouse=True)
def clean_settings_cache():
    """Cada test ve el entorno que él mismo fija"""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


def prime_field(p: int) -> PrimeField:
    return PrimeField(p=p)


def binary_field(n: int) -> BinaryField:
    return BinaryField(n=n, modulus=find_binary_irreducible(n))


def extension_field(p: int, k: int) -> ExtensionField:
    return ExtensionField(p=p, k=k, modulus=find_irreducible(p, k))


@pytest.fixture
def gf7() -> PrimeField:
    return prime_field(7)


@pytest.fixture
def gf8() -> BinaryField:
    return BinaryField(n=3, modulus=0b1011)


@pytest.fixture
def gf9() -> ExtensionField:
    return ExtensionField(p=3, k=2, modulus=(1, 0, 1))
