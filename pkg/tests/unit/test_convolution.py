"""Tests for bulk counts by convolution."""

import pytest

from src.core.exceptions import ConvolutionMismatchError, OddInputError, OutOfRangeError
from src.goldbach.convolution import count_range
from src.goldbach.counting import GoldbachCount, count_one


class TestCountRange:
    """count_range against the single-N scan."""

    def test_direct_matches_count_one(self, small_sieve):
        counts = count_range(small_sieve, 10_000, method="direct")
        assert [c.N for c in counts] == list(range(6, 10_001, 2))
        for c in counts:
            assert c == count_one(small_sieve, c.N)

    def test_fft_matches_direct(self, small_sieve):
        direct = count_range(small_sieve, 20_000, method="direct")
        fft = count_range(small_sieve, 20_000, method="fft", verify_fraction=0.05, seed=7)
        assert fft == direct

    def test_auto_threshold(self, small_sieve):
        below = count_range(small_sieve, 1000, method="auto", threshold=1000)
        above = count_range(small_sieve, 1000, method="auto", threshold=10)
        assert below == above

    def test_workers_do_not_change_result(self, small_sieve):
        single = count_range(small_sieve, 3000, method="direct", workers=1, blocks=4)
        pooled = count_range(small_sieve, 3000, method="direct", workers=2)
        assert pooled == single

    def test_smallest_range(self, small_sieve):
        assert count_range(small_sieve, 6) == [GoldbachCount(6, 1, 1, True)]

    def test_odd_limit(self, small_sieve):
        with pytest.raises(OddInputError):
            count_range(small_sieve, 1001)

    @pytest.mark.parametrize("n_max", [4, 20_002])
    def test_out_of_range(self, small_sieve, n_max):
        with pytest.raises(OutOfRangeError):
            count_range(small_sieve, n_max)

    def test_unknown_method(self, small_sieve):
        with pytest.raises(OutOfRangeError):
            count_range(small_sieve, 100, method="guess")  # type: ignore[arg-type]

    def test_bad_workers(self, small_sieve):
        with pytest.raises(OutOfRangeError):
            count_range(small_sieve, 100, workers=0)

    def test_verification_mismatch(self, small_sieve, mocker):
        mocker.patch(
            "src.goldbach.convolution.count_one",
            return_value=GoldbachCount(N=6, ordered=99, unordered=50, self_paired=True),
        )
        with pytest.raises(ConvolutionMismatchError):
            count_range(small_sieve, 200, method="fft", verify_fraction=1.0)
