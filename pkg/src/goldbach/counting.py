"""Exact Goldbach representation counts for a single even N."""

from dataclasses import dataclass

import numpy as np

from src.core.exceptions import (
    InconsistentCountError,
    NotOddPrimeError,
    OddInputError,
    OutOfRangeError,
)
from src.primes.sieve import PrimeSieve

PAIR_LISTING_LIMIT = 10_000


@dataclass(frozen=True)
class GoldbachCount:
    """
    Representations N = p1 + p2 with p1, p2 odd primes.

    ``ordered`` counts (p1, p2) and (p2, p1) separately; ``unordered`` counts p1 <= p2.
    ``self_paired`` marks N/2 as an odd prime, whose pair is counted once in both, so
    ordered = 2 * unordered - s with s = 1 exactly when it is set. The prime 2 never
    takes part.

    Raises:
        InconsistentCountError: If the counts break that identity
    """

    N: int
    ordered: int
    unordered: int
    self_paired: bool

    def __post_init__(self) -> None:
        s = int(self.self_paired)
        if (
            self.unordered < 0
            or self.ordered != 2 * self.unordered - s
            or (self.self_paired and (self.N // 2) % 2 == 0)
        ):
            raise InconsistentCountError(self.N, self.ordered, self.unordered, self.self_paired)


def _check_even(sieve: PrimeSieve, N: int, minimum: int = 4) -> None:
    if N % 2:
        raise OddInputError("N", N)
    if not minimum <= N <= sieve.limit:
        raise OutOfRangeError("N", N, f"{minimum} <= N <= limit={sieve.limit}")


def _is_odd_prime(sieve: PrimeSieve, n: int) -> bool:
    return n % 2 == 1 and 0 <= n <= sieve.limit and sieve.is_prime(n)


def count_one(sieve: PrimeSieve, N: int) -> GoldbachCount:
    """
    Count representations of one even N by scanning odd primes p <= N/2.

    Raises:
        OddInputError: If N is odd
        OutOfRangeError: If N < 4 or N > limit
    """
    _check_even(sieve, N)
    odd = sieve.odd_primes
    lower = odd[: np.searchsorted(odd, N // 2, side="right")]
    unordered = int(np.count_nonzero(sieve.is_prime_many(N - lower)))
    self_paired = _is_odd_prime(sieve, N // 2)
    return GoldbachCount(
        N=N,
        ordered=2 * unordered - int(self_paired),
        unordered=unordered,
        self_paired=self_paired,
    )


def goldbach_pairs(sieve: PrimeSieve, N: int) -> list[tuple[int, int]]:
    """List the unordered representations (p1 <= p2) of N, for N <= 10^4."""
    _check_even(sieve, N)
    if N > PAIR_LISTING_LIMIT:
        raise OutOfRangeError("N", N, f"N <= {PAIR_LISTING_LIMIT} for pair listing")
    odd = sieve.odd_primes
    lower = odd[: np.searchsorted(odd, N // 2, side="right")]
    hits = lower[sieve.is_prime_many(N - lower)]
    return [(int(p), int(N - p)) for p in hits]


def parity_sum(sieve: PrimeSieve, p1: int, p2: int) -> int:
    """
    Sum of two odd primes; always even.

    Raises:
        NotOddPrimeError: If either argument is not an odd prime within the sieve
    """
    for p in (p1, p2):
        if not _is_odd_prime(sieve, p):
            raise NotOddPrimeError(p)
    total = p1 + p2
    assert total % 2 == 0
    return total


def find_counterexamples(counts: list[GoldbachCount]) -> list[int]:
    """Even N in ``counts`` with no odd-prime representation."""
    return [c.N for c in counts if c.unordered == 0 and c.N >= 6]
