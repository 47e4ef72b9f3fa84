"""Factorization and the multiplicative functions mu and phi."""

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt, prod

import numpy as np

from src.core.exceptions import OutOfRangeError
from src.primes.sieve import PrimeSieve


@dataclass(frozen=True)
class Factorization:
    """Canonical factorization n = prod(p ** e) with strictly increasing primes."""

    n: int
    factors: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.factors)

    def value(self) -> int:
        """Reconstruct n from its factors."""
        return prod(p**e for p, e in self.factors)


def factorize(sieve: PrimeSieve, n: int) -> Factorization:
    """
    Factor ``n`` by trial division over sieved primes up to sqrt(n).

    Raises:
        OutOfRangeError: If n < 1 or n > limit**2
    """
    if n < 1:
        raise OutOfRangeError("n", n, "n >= 1")
    if n > sieve.limit**2:
        raise OutOfRangeError("n", n, f"n <= limit**2={sieve.limit**2}")

    candidates = sieve.primes[: np.searchsorted(sieve.primes, isqrt(n), side="right")]
    divisors = candidates[n % candidates == 0].tolist()

    factors: list[tuple[int, int]] = []
    m = n
    for p in divisors:
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        factors.append((p, e))
    # whatever survives has no factor <= sqrt(n), so it is prime
    if m > 1:
        factors.append((m, 1))
    return Factorization(n=n, factors=tuple(factors))


def mobius(f: Factorization) -> int:
    """Möbius function from a factorization."""
    if not f.is_squarefree:
        return 0
    return -1 if len(f.factors) % 2 else 1


def euler_phi(f: Factorization) -> int:
    """Euler's totient as prod p**(e-1) * (p-1), exact in integers."""
    return prod(p ** (e - 1) * (p - 1) for p, e in f.factors)


@dataclass(frozen=True)
class MultiplicativeTables:
    """mu(q) and phi(q) for q = 0..q_max (index 0 holds 0)."""

    mobius: np.ndarray  # int8
    totient: np.ndarray  # int64

    @property
    def q_max(self) -> int:
        return self.mobius.size - 1


@lru_cache(maxsize=4)
def multiplicative_tables(sieve: PrimeSieve, q_max: int) -> MultiplicativeTables:
    """
    Sieve-style tables of mu and phi.

    Raises:
        OutOfRangeError: If q_max < 1 or q_max > limit
    """
    if not 1 <= q_max <= sieve.limit:
        raise OutOfRangeError("q_max", q_max, f"1 <= q_max <= limit={sieve.limit}")

    mu = np.ones(q_max + 1, dtype=np.int8)
    mu[0] = 0
    phi = np.arange(q_max + 1, dtype=np.int64)
    for p in sieve.primes[: np.searchsorted(sieve.primes, q_max, side="right")].tolist():
        mu[p::p] *= -1
        if p * p <= q_max:
            mu[p * p :: p * p] = 0
        phi[p::p] -= phi[p::p] // p

    mu.flags.writeable = False
    phi.flags.writeable = False
    return MultiplicativeTables(mobius=mu, totient=phi)
