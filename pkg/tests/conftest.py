"""Shared fixtures."""

import os
from collections.abc import Iterator

import pytest

from src.config import reset_settings
from src.primes.sieve import PrimeSieve, build_sieve


@pytest.fixture(scope="session")
def small_sieve() -> PrimeSieve:
    """Primes up to 2 * 10^4."""
    return build_sieve(20_000)


@pytest.fixture(scope="session")
def sieve_1e6() -> PrimeSieve:
    """Primes up to 10^6."""
    return build_sieve(1_000_000)


@pytest.fixture(scope="session")
def prime_set(small_sieve: PrimeSieve) -> set[int]:
    return set(small_sieve.primes.tolist())


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch: pytest.MonkeyPatch) -> Iterator[None]:
    """Keep GOLDBACH_* variables from leaking into cached settings."""
    for key in list(os.environ):
        if key.startswith("GOLDBACH_"):
            monkeypatch.delenv(key)
    reset_settings()
    yield
    reset_settings()
