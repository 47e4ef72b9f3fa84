"""Bulk Goldbach counts by self-convolution of the odd-prime indicator."""

import math
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Literal

import numpy as np

from src.config import get_settings
from src.core.exceptions import ConvolutionMismatchError, NumericalError, OutOfRangeError
from src.goldbach.counting import GoldbachCount, _check_even, count_one
from src.primes.sieve import PrimeSieve
from src.utils.logging import get_logger
from src.utils.metrics import convolution_duration_seconds, convolution_verifications_total

logger = get_logger(__name__)

Method = Literal["auto", "direct", "fft"]

# max distance of an FFT output from the nearest integer before the run is rejected
FFT_ROUNDING_LIMIT = 0.25


def _direct_block(indicator: np.ndarray, start: int, stop: int) -> np.ndarray:
    """Exact ordered counts for even N in [start, stop) by dot products."""
    ns = range(start, stop, 2)
    out = np.empty(len(ns), dtype=np.int64)
    for i, n in enumerate(ns):
        out[i] = int(np.dot(indicator[: n + 1], indicator[n::-1]))
    return out


def _direct_counts(indicator: np.ndarray, n_max: int, workers: int, blocks: int) -> np.ndarray:
    """Ordered counts for even N in [6, n_max], partitioned into blocks of N."""
    evens = (n_max - 6) // 2 + 1
    per_block = max(1, math.ceil(evens / blocks))
    bounds = [
        (6 + 2 * i * per_block, min(n_max + 1, 6 + 2 * (i + 1) * per_block))
        for i in range(math.ceil(evens / per_block))
    ]
    if workers > 1 and len(bounds) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            parts = list(
                executor.map(
                    _direct_block,
                    [indicator] * len(bounds),
                    [lo for lo, _ in bounds],
                    [hi for _, hi in bounds],
                )
            )
    else:
        parts = [_direct_block(indicator, lo, hi) for lo, hi in bounds]
    return np.concatenate(parts)


def _fft_counts(indicator: np.ndarray, n_max: int) -> np.ndarray:
    """Ordered counts for even N in [6, n_max] from a real FFT, rounded."""
    size = 1 << (2 * (n_max + 1) - 1).bit_length()
    spectrum = np.fft.rfft(indicator.astype(np.float64), size)
    conv = np.fft.irfft(spectrum * spectrum, size)[6 : n_max + 1 : 2]
    rounded = np.rint(conv)
    worst = float(np.max(np.abs(conv - rounded))) if conv.size else 0.0
    if worst > FFT_ROUNDING_LIMIT:
        raise NumericalError(f"FFT convolution residue {worst:.3e} too large for N_max={n_max}")
    logger.debug("fft_convolution_residue", n_max=n_max, worst=worst)
    return rounded.astype(np.int64)


def _verify_sample(
    sieve: PrimeSieve, ordered: np.ndarray, fraction: float, seed: int
) -> int:
    """Re-check a random fraction of transform counts against the direct scan."""
    rng = np.random.default_rng(seed)
    size = max(1, math.ceil(fraction * ordered.size))
    picks = np.sort(rng.choice(ordered.size, size=min(size, ordered.size), replace=False))
    for i in picks.tolist():
        n = 6 + 2 * i
        exact = count_one(sieve, n).ordered
        if exact != int(ordered[i]):
            convolution_verifications_total.labels(status="mismatch").inc()
            raise ConvolutionMismatchError(n, int(ordered[i]), exact)
    convolution_verifications_total.labels(status="ok").inc()
    return picks.size


def count_range(
    sieve: PrimeSieve,
    n_max: int,
    *,
    method: Method = "auto",
    threshold: int | None = None,
    workers: int = 1,
    blocks: int | None = None,
    verify_fraction: float | None = None,
    seed: int | None = None,
) -> list[GoldbachCount]:
    """
    Goldbach counts for every even N in [6, n_max].

    Args:
        sieve: Prime sieve covering n_max
        n_max: Largest even N, at least 6
        method: "direct" (exact dot products), "fft" (rounded transform verified on a
            random sample) or "auto" (direct up to ``threshold``)
        threshold: Largest n_max counted directly under "auto"
        workers: Process count for the direct path
        blocks: Number of N-blocks the direct path is split into (defaults to workers)
        verify_fraction: Share of FFT counts re-checked exactly
        seed: Seed for the verification sample

    Returns:
        One GoldbachCount per even N, ascending

    Raises:
        OddInputError: If n_max is odd
        OutOfRangeError: If n_max < 6 or n_max > limit
        ConvolutionMismatchError: If a verified FFT count differs from the exact scan
    """
    _check_even(sieve, n_max, minimum=6)
    settings = get_settings()
    threshold = settings.CONVOLUTION_THRESHOLD if threshold is None else threshold
    verify_fraction = settings.FFT_VERIFY_FRACTION if verify_fraction is None else verify_fraction
    seed = settings.RANDOM_SEED if seed is None else seed
    if workers < 1:
        raise OutOfRangeError("workers", workers, "workers >= 1")

    if method == "auto":
        method = "direct" if n_max <= threshold else "fft"

    started = time.perf_counter()
    indicator = sieve.odd_prime_indicator(n_max)
    if method == "direct":
        ordered = _direct_counts(indicator, n_max, workers, blocks or workers)
        verified = 0
    elif method == "fft":
        ordered = _fft_counts(indicator, n_max)
        verified = _verify_sample(sieve, ordered, verify_fraction, seed)
    else:
        raise OutOfRangeError("method", method, "one of auto, direct, fft")

    elapsed = time.perf_counter() - started
    convolution_duration_seconds.labels(method=method).observe(elapsed)
    logger.info(
        "goldbach_range_counted",
        n_max=n_max,
        method=method,
        verified=verified,
        duration_ms=int(elapsed * 1000),
    )

    counts: list[GoldbachCount] = []
    for i, value in enumerate(ordered.tolist()):
        n = 6 + 2 * i
        self_paired = bool(indicator[n // 2])
        counts.append(
            GoldbachCount(
                N=n,
                ordered=value,
                unordered=(value + int(self_paired)) // 2,
                self_paired=self_paired,
            )
        )
    return counts
