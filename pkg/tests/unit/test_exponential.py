"""Tests for prime exponential sums and the orthogonality count."""

import cmath
import math

import numpy as np
import pytest

from src.circle.arcs import ArcParams, minor_bound
from src.circle.exponential import (
    exp_sum_grid,
    exp_sum_primes,
    lemma4_probe,
    minor_arc_ratios,
    rep_count_via_orthogonality,
)
from src.core.exceptions import OutOfRangeError, RoundingResidueError
from src.goldbach.counting import count_one


class TestExpSumPrimes:
    """Direct summation of S_alpha."""

    def test_alpha_zero_counts_odd_primes(self, small_sieve):
        assert exp_sum_primes(small_sieve, 10, 0.0).value == 3
        assert exp_sum_primes(small_sieve, 100, 0.0).value == 24

    def test_half(self, small_sieve):
        assert exp_sum_primes(small_sieve, 10, 0.5).value == pytest.approx(-3)

    def test_third_cancels(self, small_sieve):
        assert abs(exp_sum_primes(small_sieve, 10, 1 / 3).value) < 1e-12

    def test_reduced_modulo_one(self, small_sieve):
        sample = exp_sum_primes(small_sieve, 1000, 2.25)
        assert sample.alpha == 0.25
        assert sample.value == exp_sum_primes(small_sieve, 1000, 0.25).value

    def test_matches_naive_sum(self, small_sieve):
        alpha = 0.123456789
        odd = [p for p in small_sieve.primes.tolist() if 2 < p <= 5000]
        naive = sum(cmath.exp(2j * math.pi * alpha * p) for p in odd)
        assert exp_sum_primes(small_sieve, 5000, alpha).value == pytest.approx(naive, abs=1e-9)

    def test_conjugate_symmetry(self, small_sieve):
        for alpha in (0.5, 0.61, 0.75, 0.999):
            left = exp_sum_primes(small_sieve, 5000, alpha).value
            right = exp_sum_primes(small_sieve, 5000, 1.0 - alpha).value
            assert left == pytest.approx(right.conjugate(), abs=1e-9)

    def test_tiny_alpha(self, small_sieve):
        value = exp_sum_primes(small_sieve, 1000, 1e-30).value
        assert value == pytest.approx(167)

    def test_rejects(self, small_sieve):
        with pytest.raises(OutOfRangeError):
            exp_sum_primes(small_sieve, 20_001, 0.1)
        with pytest.raises(OutOfRangeError):
            exp_sum_primes(small_sieve, 100, math.inf)


class TestGrid:
    """S on the grid m/M from one transform."""

    def test_grid_matches_direct(self, small_sieve):
        grid = exp_sum_grid(small_sieve, 500, 1024)
        for m in (0, 1, 77, 512, 1000):
            direct = exp_sum_primes(small_sieve, 500, m / 1024).value
            assert grid[m] == pytest.approx(direct, abs=1e-9)

    def test_requires_m_above_n(self, small_sieve):
        with pytest.raises(OutOfRangeError):
            exp_sum_grid(small_sieve, 500, 500)


class TestOrthogonality:
    """The discrete circle-method identity reproduces the exact count."""

    @pytest.mark.parametrize("N,M,expected", [(10, 32, 3), (6, 16, 1), (100, 256, 12)])
    def test_examples(self, small_sieve, N, M, expected):
        assert rep_count_via_orthogonality(small_sieve, N, M) == expected

    def test_all_even_n(self, small_sieve):
        for N in range(6, 2001, 2):
            M = 1 << (2 * N - 1).bit_length()
            assert rep_count_via_orthogonality(small_sieve, N, M) == count_one(
                small_sieve, N
            ).ordered, N

    def test_non_power_of_two_grid(self, small_sieve):
        assert rep_count_via_orthogonality(small_sieve, 1000, 2000) == count_one(
            small_sieve, 1000
        ).ordered

    def test_grid_too_small(self, small_sieve):
        with pytest.raises(OutOfRangeError):
            rep_count_via_orthogonality(small_sieve, 100, 199)

    def test_residue_rejected(self, small_sieve, mocker):
        size = 256
        rng = np.random.default_rng(0)
        noisy = exp_sum_grid(small_sieve, 100, size) + rng.normal(0.0, 1.0, size)
        mocker.patch("src.circle.exponential.exp_sum_grid", return_value=noisy)
        with pytest.raises(RoundingResidueError):
            rep_count_via_orthogonality(small_sieve, 100, size)


class TestMeanModulus:
    """Grid mean of |S_alpha|."""

    def test_grid_refinement_is_stable(self, small_sieve):
        coarse = lemma4_probe(small_sieve, 100, 1024)
        fine = lemma4_probe(small_sieve, 100, 4096)
        assert fine == pytest.approx(coarse, rel=1e-2)

    def test_bounded_by_l2_norm(self, small_sieve):
        # mean |S| <= sqrt(mean |S|^2) = sqrt(pi(N) - 1) by Parseval
        assert lemma4_probe(small_sieve, 1000, 4096) <= math.sqrt(167) + 1e-9

    def test_grid_too_small(self, small_sieve):
        with pytest.raises(OutOfRangeError):
            lemma4_probe(small_sieve, 100, 399)


class TestMinorArcs:
    """Sampling on the minor arcs."""

    @pytest.fixture
    def params(self):
        # few major denominators, so most of the circle is minor
        N = 10_000
        return ArcParams(N=N, c=2.0, r=math.log(N), tau=5000.0, q_major_bound=4.0)

    def test_collects_samples(self, small_sieve, params):
        report = minor_arc_ratios(small_sieve, params, 10, 0.0, seed=5)
        assert report.samples == 10
        assert report.max_ratio > 0
        assert report.q >= 1
        assert report.delta >= 0

    def test_seeded(self, small_sieve, params):
        first = minor_arc_ratios(small_sieve, params, 10, 0.0, seed=5)
        second = minor_arc_ratios(small_sieve, params, 10, 0.0, seed=5)
        assert first == second

    def test_covered_circle_yields_nothing(self, small_sieve):
        params = ArcParams(N=100, c=2.0, r=math.log(100), tau=1.5, q_major_bound=4.0)
        report = minor_arc_ratios(small_sieve, params, 3, 0.0, seed=1)
        assert report.samples == 0
        assert report.max_ratio == 0.0

    def test_rejects_zero_samples(self, small_sieve, params):
        with pytest.raises(OutOfRangeError):
            minor_arc_ratios(small_sieve, params, 0, 0.0, seed=1)

    def test_envelope_ratio_is_reported(self, small_sieve, params):
        report = minor_arc_ratios(small_sieve, params, 5, 0.0, seed=9)
        value = abs(exp_sum_primes(small_sieve, params.N, report.alpha).value)
        envelope = minor_bound(params, report.q, report.delta, 0.0)
        assert report.max_ratio == pytest.approx(value / envelope)
