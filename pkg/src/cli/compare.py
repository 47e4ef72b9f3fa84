"""Exact Goldbach counts against singular-series predictions."""

from collections.abc import Sequence

import numpy as np

from src.circle.integrals import main_term_integral
from src.cli.schemas import RATIO_COLUMNS, ComparisonRow
from src.goldbach.counting import GoldbachCount
from src.primes.arithmetic import factorize
from src.primes.sieve import PrimeSieve
from src.series.base import SeriesVariant
from src.series.variants import evaluate_variant, main_term_scale, series_hardy_littlewood
from src.utils.logging import get_logger

logger = get_logger(__name__)


def _ratio(exact: int, predicted: float, *, N: int, column: str, variant: str) -> float | None:
    if predicted == 0:
        logger.warning("zero_prediction", N=N, column=column, variant=variant)
        return None
    return exact / predicted


def build_rows(
    sieve: PrimeSieve,
    counts: Sequence[GoldbachCount],
    variants: Sequence[SeriesVariant],
    trunc_p: int,
    trunc_q: int,
    *,
    verbose: bool = False,
    tol: float = 1e-6,
) -> list[ComparisonRow]:
    """
    One row per (N, variant), ordered by N and then by the given variant order.

    pred_paper = N/(2 r^2) * S_variant(N) and pred_hl = S_HL(N) * N/r^2 with r = ln N.
    Both ratios divide the ordered count. Verbose rows add the unordered variant ratio and
    the Hardy-Littlewood prediction built on the smooth main-term integral.
    """
    rows: list[ComparisonRow] = []
    for count in sorted(counts, key=lambda c: c.N):
        N = count.N
        scale = main_term_scale(N)
        hl = series_hardy_littlewood(sieve, factorize(sieve, N), trunc_p).value
        pred_hl = hl * scale
        pred_hl_integral = hl * main_term_integral(N, tol) if verbose else None

        for variant in variants:
            label = variant.label
            series = evaluate_variant(sieve, N, variant, trunc_p, trunc_q).value
            pred_paper = 0.5 * scale * series
            extra: dict[str, float | None] = {}
            if verbose:
                assert pred_hl_integral is not None
                extra = {
                    "ratio_paper_unordered": _ratio(
                        count.unordered, pred_paper, N=N, column="ratio_paper", variant=label
                    ),
                    "pred_hl_integral": pred_hl_integral,
                    "ratio_hl_integral": _ratio(
                        count.ordered, pred_hl_integral, N=N, column="ratio_hl", variant=label
                    ),
                }
            rows.append(
                ComparisonRow(
                    N=N,
                    r_ordered=count.ordered,
                    r_unordered=count.unordered,
                    pred_paper=pred_paper,
                    pred_hl=pred_hl,
                    ratio_paper=_ratio(
                        count.ordered, pred_paper, N=N, column="ratio_paper", variant=label
                    ),
                    ratio_hl=_ratio(count.ordered, pred_hl, N=N, column="ratio_hl", variant=label),
                    variant=label,
                    **extra,
                )
            )
    return rows


def summarize(rows: Sequence[ComparisonRow]) -> list[dict[str, str | int | float]]:
    """Mean, median and max of each ratio column, per variant."""
    summary: list[dict[str, str | int | float]] = []
    labels = list(dict.fromkeys(row.variant for row in rows))
    for label in labels:
        selected = [row for row in rows if row.variant == label]
        for column in RATIO_COLUMNS:
            values = np.array(
                [v for row in selected if (v := getattr(row, column)) is not None],
                dtype=np.float64,
            )
            if values.size == 0:
                continue
            summary.append(
                {
                    "variant": label,
                    "column": column,
                    "count": int(values.size),
                    "mean": float(np.mean(values)),
                    "median": float(np.median(values)),
                    "max": float(np.max(values)),
                }
            )
    return summary
