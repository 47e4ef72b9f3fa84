"""Segmented, odd-only, bit-packed sieve of Eratosthenes."""

import time
from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

import numpy as np

from src.config import get_settings
from src.core.exceptions import OutOfRangeError
from src.utils.logging import get_logger
from src.utils.metrics import sieve_build_duration_seconds

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class PrimeSieve:
    """
    Immutable primality table for 0..limit.

    Bit k of ``bitmap`` (LSB-first within each byte) says whether the odd integer 2k+1 is
    prime; 2 is handled separately. Instances hash by identity so they can key caches.
    """

    limit: int
    bitmap: np.ndarray  # uint8
    primes: np.ndarray  # int64, ascending

    def __post_init__(self) -> None:
        self.bitmap.flags.writeable = False
        self.primes.flags.writeable = False

    @property
    def odd_count(self) -> int:
        """Number of odd integers in [1, limit]."""
        return (self.limit + 1) // 2

    @property
    def odd_primes(self) -> np.ndarray:
        return self.primes[1:]

    def _check_range(self, lo: int, hi: int) -> None:
        if lo < 0 or hi > self.limit:
            raise OutOfRangeError("n", lo if lo < 0 else hi, f"0 <= n <= limit={self.limit}")

    def is_prime(self, n: int) -> bool:
        """Primality of a single integer in [0, limit]."""
        self._check_range(n, n)
        if n == 2:
            return True
        if n % 2 == 0:
            return False
        k = n >> 1
        return bool((int(self.bitmap[k >> 3]) >> (k & 7)) & 1)

    def is_prime_many(self, ns: np.ndarray) -> np.ndarray:
        """Vectorised primality for an integer array with entries in [0, limit]."""
        ns = np.asarray(ns, dtype=np.int64)
        if ns.size == 0:
            return np.zeros(0, dtype=bool)
        self._check_range(int(ns.min()), int(ns.max()))
        k = ns >> 1
        bits = (self.bitmap[k >> 3] >> (k & 7).astype(np.uint8)) & 1
        return ((ns & 1) == 1) & (bits == 1) | (ns == 2)

    def primality(self) -> np.ndarray:
        """Full boolean table indexed 0..limit."""
        bits = np.unpackbits(self.bitmap, bitorder="little")[: self.odd_count].astype(bool)
        table = np.zeros(self.limit + 1, dtype=bool)
        table[1::2] = bits
        table[2] = True
        return table

    def odd_prime_indicator(self, upto: int) -> np.ndarray:
        """Indicator of odd primes <= upto as an int64 array of length upto+1."""
        self._check_range(0, upto)
        indicator = np.zeros(upto + 1, dtype=np.int64)
        odd = self.odd_primes
        indicator[odd[: np.searchsorted(odd, upto, side="right")]] = 1
        return indicator


def small_odd_primes(n: int) -> np.ndarray:
    """Odd primes <= n by the plain sieve; used as base primes for segments."""
    if n < 3:
        return np.zeros(0, dtype=np.int64)
    is_prime = np.ones(n + 1, dtype=bool)
    is_prime[:2] = False
    for i in range(2, isqrt(n) + 1):
        if is_prime[i]:
            is_prime[i * i :: i] = False
    return np.flatnonzero(is_prime)[1:].astype(np.int64)


def _sieve_segment(start: int, stop: int, base: np.ndarray) -> np.ndarray:
    """Primality of odd integers 2k+1 for k in [start, stop)."""
    segment = np.ones(stop - start, dtype=bool)
    if start == 0:
        segment[0] = False  # 1 is not prime
    low = 2 * start + 1
    high = 2 * (stop - 1) + 1
    for p in base.tolist():
        first = p * p
        if first > high:
            break
        if first < low:
            m = -(-low // p)
            if m % 2 == 0:
                m += 1
            first = p * m
        # consecutive odd multiples of p are p apart in index space
        segment[(first >> 1) - start :: p] = False
    return segment


def build_sieve(limit: int, segment_size: int | None = None) -> PrimeSieve:
    """
    Build the primality table for 0..limit segment by segment.

    Args:
        limit: Largest integer covered, at least 2
        segment_size: Odd integers per segment (multiple of 8), defaults to settings

    Returns:
        PrimeSieve

    Raises:
        OutOfRangeError: If limit < 2 or the segment size is invalid
    """
    if limit < 2:
        raise OutOfRangeError("limit", limit, "limit >= 2")
    segment_size = segment_size or get_settings().SIEVE_SEGMENT_SIZE
    if segment_size % 8 != 0:
        raise OutOfRangeError("segment_size", segment_size, "multiple of 8")

    started = time.perf_counter()
    odd_count = (limit + 1) // 2
    base = small_odd_primes(isqrt(limit))

    packed: list[np.ndarray] = [np.zeros(0, dtype=np.uint8)]
    found: list[np.ndarray] = [np.array([2], dtype=np.int64)]
    for start in range(0, odd_count, segment_size):
        stop = min(start + segment_size, odd_count)
        segment = _sieve_segment(start, stop, base)
        packed.append(np.packbits(segment, bitorder="little"))
        found.append(2 * (np.flatnonzero(segment).astype(np.int64) + start) + 1)

    sieve = PrimeSieve(limit=limit, bitmap=np.concatenate(packed), primes=np.concatenate(found))

    elapsed = time.perf_counter() - started
    sieve_build_duration_seconds.observe(elapsed)
    logger.info(
        "sieve_built",
        limit=limit,
        prime_count=int(sieve.primes.size),
        segments=-(-odd_count // segment_size),
        duration_ms=int(elapsed * 1000),
    )
    return sieve


@lru_cache(maxsize=2)
def _cached_sieve(limit: int) -> PrimeSieve:
    return build_sieve(limit)


def sieve_covering(sieve: PrimeSieve, bound: int) -> PrimeSieve:
    """``sieve`` itself when it reaches ``bound``, else a cached longer sieve."""
    return sieve if bound <= sieve.limit else _cached_sieve(bound)


def primes_upto(sieve: PrimeSieve, bound: int) -> np.ndarray:
    """All primes <= bound, extending the sieve when needed."""
    primes = sieve_covering(sieve, bound).primes
    return primes[: np.searchsorted(primes, bound, side="right")]
