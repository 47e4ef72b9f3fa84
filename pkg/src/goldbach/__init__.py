"""Exact Goldbach representation counting."""

from src.goldbach.convolution import count_range
from src.goldbach.counting import (
    GoldbachCount,
    count_one,
    find_counterexamples,
    goldbach_pairs,
    parity_sum,
)

__all__ = [
    "GoldbachCount",
    "count_one",
    "count_range",
    "goldbach_pairs",
    "parity_sum",
    "find_counterexamples",
]
