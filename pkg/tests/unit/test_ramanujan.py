"""Tests for Ramanujan sums and G(q)."""

import math

import numpy as np
import pytest

from src.core.exceptions import OutOfRangeError
from src.primes.arithmetic import factorize, mobius
from src.primes.sieve import build_sieve
from src.series.base import CoefficientMode
from src.series.ramanujan import g_of_q, g_of_q_table, ramanujan_sum, ramanujan_sum_direct

MU = CoefficientMode.MU_AS_WRITTEN
MU2 = CoefficientMode.MU_SQUARED


def _direct_grid(q: int, ns: np.ndarray) -> np.ndarray:
    a = np.array([k for k in range(1, q + 1) if math.gcd(k, q) == 1], dtype=np.int64)
    phases = (a[:, None] * ns[None, :]) % q
    return np.exp(2j * np.pi * phases / q).sum(axis=0)


class TestRamanujanSum:
    """Closed form against direct summation."""

    @pytest.mark.parametrize("q,N,expected", [(1, 6, 1), (3, 6, 2), (4, 6, -2), (5, 6, -1)])
    def test_examples(self, small_sieve, q, N, expected):
        assert ramanujan_sum(small_sieve, q, N) == expected

    def test_closed_form_matches_direct(self, small_sieve):
        for q in range(1, 61):
            for N in range(0, 121):
                direct = ramanujan_sum_direct(q, N)
                assert abs(direct.imag) < 1e-9
                assert ramanujan_sum(small_sieve, q, N) == round(direct.real), (q, N)

    def test_divisible_gives_totient(self, small_sieve):
        assert ramanujan_sum(small_sieve, 12, 24) == 4

    def test_multiplicative_in_q(self, small_sieve):
        rng = np.random.default_rng(17)
        checked = 0
        while checked < 200:
            m, n = (int(v) for v in rng.integers(1, 150, size=2))
            if math.gcd(m, n) != 1:
                continue
            N = int(rng.integers(1, 10_000))
            assert ramanujan_sum(small_sieve, m * n, N) == ramanujan_sum(
                small_sieve, m, N
            ) * ramanujan_sum(small_sieve, n, N)
            checked += 1

    def test_rejects_zero_modulus(self, small_sieve):
        with pytest.raises(OutOfRangeError):
            ramanujan_sum(small_sieve, 0, 6)
        with pytest.raises(OutOfRangeError):
            ramanujan_sum_direct(0, 6)

    @pytest.mark.slow
    def test_grid_up_to_five_hundred(self, small_sieve):
        ns = np.arange(1, 501, dtype=np.int64)
        for q in range(1, 501):
            direct = np.rint(_direct_grid(q, ns).real).astype(np.int64)
            closed = [ramanujan_sum(small_sieve, q, int(N)) for N in ns]
            assert closed == direct.tolist(), q


class TestG:
    """Tests for the coefficient G(q)."""

    def test_one(self, small_sieve):
        assert g_of_q(small_sieve, 1, 10, MU) == 1.0
        assert g_of_q(small_sieve, 1, 10, MU2) == 1.0

    def test_two_for_even_n(self, small_sieve):
        assert g_of_q(small_sieve, 2, 10, MU) == -1.0
        assert g_of_q(small_sieve, 2, 10, MU2) == 1.0

    def test_non_squarefree_vanishes(self, small_sieve):
        for q in (4, 9, 12, 18, 50):
            assert g_of_q(small_sieve, q, 30, MU) == 0.0
            assert g_of_q(small_sieve, q, 30, MU2) == 0.0

    def test_odd_prime(self, small_sieve):
        # c_3(10) = -1, phi(3) = 2
        assert g_of_q(small_sieve, 3, 10, MU2) == pytest.approx(-0.25)
        assert g_of_q(small_sieve, 3, 10, MU) == pytest.approx(0.25)

    @pytest.mark.parametrize("mode", [MU, MU2])
    @pytest.mark.parametrize("N", [6, 30, 1024, 9240])
    def test_table_matches_pointwise(self, small_sieve, mode, N):
        table = g_of_q_table(small_sieve, N, 300, mode)
        assert table.size == 300
        for q in range(1, 301):
            assert table[q - 1] == pytest.approx(g_of_q(small_sieve, q, N, mode), abs=1e-15)

    def test_table_beyond_sieve(self):
        sieve = build_sieve(50)
        table = g_of_q_table(sieve, 10, 200, MU2)
        assert table[198] == pytest.approx(g_of_q(sieve, 199, 10, MU2))

    @pytest.mark.parametrize("mode", [MU, MU2])
    def test_multiplicative(self, small_sieve, mode):
        rng = np.random.default_rng(29)
        checked = 0
        while checked < 200:
            q1, q2 = (int(v) for v in rng.integers(1, 1001, size=2))
            if math.gcd(q1, q2) != 1:
                continue
            if mobius(factorize(small_sieve, q1)) == 0 or mobius(factorize(small_sieve, q2)) == 0:
                continue
            N = int(rng.integers(4, 1_000_001))
            product = g_of_q(small_sieve, q1, N, mode) * g_of_q(small_sieve, q2, N, mode)
            assert abs(g_of_q(small_sieve, q1 * q2, N, mode) - product) < 1e-9, (q1, q2, N)
            checked += 1

    def test_table_rejects_empty(self, small_sieve):
        with pytest.raises(OutOfRangeError):
            g_of_q_table(small_sieve, 10, 0, MU)
