"""Tests for comparison rows and their summary."""

import math

import numpy as np
import pytest

from src.cli.compare import build_rows, summarize
from src.goldbach.counting import count_one
from src.primes.arithmetic import factorize
from src.series.base import SeriesVariant
from src.series.variants import series_hardy_littlewood

CLOSED = SeriesVariant.parse("PAPER_CLOSED")
PRODUCT_MU = SeriesVariant.parse("PRODUCT_OVER_P:mu")


class TestBuildRows:
    """Predictions and ratios per (N, variant)."""

    def test_headline_values(self, small_sieve):
        count = count_one(small_sieve, 1000)
        (row,) = build_rows(small_sieve, [count], [CLOSED], 1000, 1000)
        scale = 1000 / math.log(1000) ** 2
        hl = series_hardy_littlewood(small_sieve, factorize(small_sieve, 1000), 1000).value
        assert row.N == 1000
        assert row.r_ordered == count.ordered
        assert row.r_unordered == count.unordered
        assert row.pred_hl == pytest.approx(hl * scale)
        assert row.ratio_hl == pytest.approx(count.ordered / row.pred_hl)
        assert row.ratio_paper == pytest.approx(count.ordered / row.pred_paper)
        assert row.variant == "PAPER_CLOSED"
        assert row.pred_hl_integral is None

    def test_order_by_n_then_variant(self, small_sieve):
        counts = [count_one(small_sieve, N) for N in (20, 10)]
        rows = build_rows(small_sieve, counts, [PRODUCT_MU, CLOSED], 100, 100)
        assert [(row.N, row.variant) for row in rows] == [
            (10, "PRODUCT_OVER_P:mu"),
            (10, "PAPER_CLOSED"),
            (20, "PRODUCT_OVER_P:mu"),
            (20, "PAPER_CLOSED"),
        ]

    def test_zero_prediction_gives_no_ratio(self, small_sieve):
        (row,) = build_rows(small_sieve, [count_one(small_sieve, 100)], [PRODUCT_MU], 100, 100)
        assert row.pred_paper == 0.0
        assert row.ratio_paper is None
        assert row.ratio_hl is not None

    def test_verbose_columns(self, small_sieve):
        count = count_one(small_sieve, 1000)
        (row,) = build_rows(small_sieve, [count], [CLOSED], 1000, 1000, verbose=True)
        assert row.ratio_paper_unordered == pytest.approx(count.unordered / row.pred_paper)
        assert row.pred_hl_integral > row.pred_hl
        assert row.ratio_hl_integral == pytest.approx(count.ordered / row.pred_hl_integral)


class TestSummarize:
    def test_statistics(self, small_sieve):
        counts = [count_one(small_sieve, N) for N in range(100, 201, 2)]
        rows = build_rows(small_sieve, counts, [CLOSED, PRODUCT_MU], 100, 100)
        summary = summarize(rows)
        # PRODUCT_OVER_P:mu predicts 0 and no row is verbose
        assert [(item["variant"], item["column"]) for item in summary] == [
            ("PAPER_CLOSED", "ratio_paper"),
            ("PAPER_CLOSED", "ratio_hl"),
            ("PRODUCT_OVER_P:mu", "ratio_hl"),
        ]
        ratios = np.array([row.ratio_hl for row in rows if row.variant == "PAPER_CLOSED"])
        assert summary[1]["count"] == 51
        assert summary[1]["mean"] == pytest.approx(float(np.mean(ratios)))
        assert summary[1]["median"] == pytest.approx(float(np.median(ratios)))
        assert summary[1]["max"] == pytest.approx(float(np.max(ratios)))

    def test_empty(self):
        assert summarize([]) == []


@pytest.mark.slow
class TestHardyLittlewoodAgreement:
    """At N near 10^6 the Hardy-Littlewood prediction tracks the exact counts."""

    def test_refined_ratio_close_to_one(self, sieve_1e6):
        rng = np.random.default_rng(20130806)
        ns = sorted({int(v) for v in 2 * rng.integers(450_000, 500_001, size=100)})
        counts = [count_one(sieve_1e6, N) for N in ns]
        rows = build_rows(sieve_1e6, counts, [CLOSED], 100_000, 100_000, verbose=True)
        refined = np.mean([row.ratio_hl_integral for row in rows])
        plain = np.mean([row.ratio_hl for row in rows])
        assert 0.95 <= refined <= 1.05
        assert plain > 1.0
