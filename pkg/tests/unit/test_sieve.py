"""Tests for the segmented sieve."""

import numpy as np
import pytest
import sympy

from src.core.exceptions import OutOfRangeError
from src.primes.sieve import PrimeSieve, build_sieve, primes_upto, sieve_covering


class TestBuildSieve:
    """Tests for build_sieve."""

    def test_smallest_limit(self):
        sieve = build_sieve(2)
        assert sieve.primes.tolist() == [2]

    def test_limit_ten(self):
        assert build_sieve(10).primes.tolist() == [2, 3, 5, 7]

    def test_limit_hundred(self):
        assert build_sieve(100).primes.size == 25

    @pytest.mark.parametrize("limit", [1, 0, -5])
    def test_rejects_small_limit(self, limit):
        with pytest.raises(OutOfRangeError):
            build_sieve(limit)

    def test_rejects_unaligned_segment(self):
        with pytest.raises(OutOfRangeError):
            build_sieve(1000, segment_size=12)

    def test_matches_sympy(self, small_sieve: PrimeSieve):
        expected = list(sympy.primerange(2, small_sieve.limit + 1))
        assert small_sieve.primes.tolist() == expected

    @pytest.mark.parametrize("segment_size", [8, 64, 1024])
    def test_segmentation_does_not_change_result(self, segment_size):
        reference = build_sieve(5000, segment_size=1 << 18)
        sieve = build_sieve(5000, segment_size=segment_size)
        assert np.array_equal(sieve.bitmap, reference.bitmap)
        assert np.array_equal(sieve.primes, reference.primes)

    def test_known_counts(self, sieve_1e6: PrimeSieve):
        primes = sieve_1e6.primes
        for x, expected in [(10**3, 168), (10**4, 1229), (10**5, 9592), (10**6, 78498)]:
            assert int(np.searchsorted(primes, x, side="right")) == expected

    def test_bitmap_size(self):
        sieve = build_sieve(1001)
        # 501 odd numbers in [1, 1001]
        assert sieve.odd_count == 501
        assert sieve.bitmap.size == 63

    def test_immutable(self, small_sieve: PrimeSieve):
        with pytest.raises(ValueError):
            small_sieve.primes[0] = 4
        with pytest.raises(ValueError):
            small_sieve.bitmap[0] = 0


class TestPrimality:
    """Tests for primality queries."""

    def test_is_prime_matches_sympy(self, small_sieve: PrimeSieve):
        for n in range(0, 3000):
            assert small_sieve.is_prime(n) == sympy.isprime(n), n

    def test_is_prime_many(self, small_sieve: PrimeSieve):
        ns = np.arange(0, 3000)
        expected = [sympy.isprime(int(n)) for n in ns]
        assert small_sieve.is_prime_many(ns).tolist() == expected

    def test_is_prime_many_empty(self, small_sieve: PrimeSieve):
        assert small_sieve.is_prime_many(np.array([], dtype=np.int64)).size == 0

    def test_primality_table(self):
        sieve = build_sieve(50)
        table = sieve.primality()
        assert np.flatnonzero(table).tolist() == sieve.primes.tolist()

    @pytest.mark.parametrize("n", [-1, 20_001])
    def test_out_of_range(self, small_sieve: PrimeSieve, n):
        with pytest.raises(OutOfRangeError):
            small_sieve.is_prime(n)

    def test_odd_prime_indicator(self):
        sieve = build_sieve(30)
        indicator = sieve.odd_prime_indicator(12)
        assert indicator.dtype == np.int64
        assert np.flatnonzero(indicator).tolist() == [3, 5, 7, 11]


class TestCovering:
    """Tests for sieve extension helpers."""

    def test_covering_returns_same_sieve(self, small_sieve: PrimeSieve):
        assert sieve_covering(small_sieve, 100) is small_sieve

    def test_covering_extends(self):
        sieve = build_sieve(100)
        longer = sieve_covering(sieve, 1000)
        assert longer.limit == 1000

    def test_primes_upto_beyond_limit(self):
        sieve = build_sieve(10)
        assert primes_upto(sieve, 30).tolist() == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
