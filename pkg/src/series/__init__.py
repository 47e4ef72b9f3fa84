"""Singular-series variants and the Ramanujan-sum coefficients they are built from."""

from src.series.base import (
    ALL_VARIANTS,
    CoefficientMode,
    SeriesTag,
    SeriesVariant,
    SingularSeriesValue,
)
from src.series.ramanujan import g_of_q, g_of_q_table, ramanujan_sum, ramanujan_sum_direct
from src.series.variants import (
    claimed_bounds,
    evaluate_variant,
    main_term_scale,
    series_hardy_littlewood,
    series_paper_closed,
    series_paper_divisor,
    series_product_over_p,
    series_sum_over_q,
    twin_prime_constant,
)

__all__ = [
    "ALL_VARIANTS",
    "CoefficientMode",
    "SeriesTag",
    "SeriesVariant",
    "SingularSeriesValue",
    "ramanujan_sum",
    "ramanujan_sum_direct",
    "g_of_q",
    "g_of_q_table",
    "series_sum_over_q",
    "series_product_over_p",
    "series_paper_closed",
    "series_paper_divisor",
    "series_hardy_littlewood",
    "twin_prime_constant",
    "evaluate_variant",
    "claimed_bounds",
    "main_term_scale",
]
