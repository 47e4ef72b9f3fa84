"""Exponential sums over primes and the discrete circle-method identities built on them."""

import math
from dataclasses import dataclass

import numpy as np

from src.circle.arcs import ArcClass, ArcParams, classify_alpha, minor_bound
from src.core.exceptions import OutOfRangeError, RoundingResidueError
from src.primes.sieve import PrimeSieve
from src.utils.logging import get_logger
from src.utils.metrics import orthogonality_checks_total

logger = get_logger(__name__)

ROUNDING_RESIDUE_LIMIT = 1e-3

# dyadic denominators up to this many bits are reduced exactly in uint64
_EXACT_PHASE_BITS = 64


@dataclass(frozen=True)
class ExpSumSample:
    """S_alpha = sum over primes 2 < p <= N of exp(2 pi i alpha p)."""

    alpha: float
    value: complex
    N: int


def _check_n(sieve: PrimeSieve, N: int) -> None:
    if not 0 <= N <= sieve.limit:
        raise OutOfRangeError("N", N, f"0 <= N <= limit={sieve.limit}")


def _phases(primes: np.ndarray, alpha: float) -> np.ndarray:
    """
    alpha * p mod 1 for each prime.

    A float alpha is num / 2^k exactly, so for k <= 64 the product num * p is reduced
    modulo 2^k with wrapping uint64 arithmetic and no rounding at all.
    """
    num, den = alpha.as_integer_ratio()
    bits = den.bit_length() - 1
    if bits > _EXACT_PHASE_BITS:
        # alpha < 2^-11 here, so alpha * p is tiny and needs no reduction tricks
        return np.mod(alpha * primes.astype(np.float64), 1.0)
    mask = np.uint64((1 << bits) - 1)
    with np.errstate(over="ignore"):
        residues = (np.uint64(num) * primes.astype(np.uint64)) & mask
    return residues.astype(np.float64) / float(den)


def exp_sum_primes(sieve: PrimeSieve, N: int, alpha: float) -> ExpSumSample:
    """
    Direct summation of S_alpha over the odd primes 3 <= p <= N.

    Raises:
        OutOfRangeError: If N exceeds the sieve or alpha is not finite
    """
    _check_n(sieve, N)
    if not math.isfinite(alpha):
        raise OutOfRangeError("alpha", alpha, "finite")
    alpha = alpha % 1.0
    odd = sieve.odd_primes
    primes = odd[: np.searchsorted(odd, N, side="right")]
    terms = np.exp(2j * np.pi * _phases(primes, alpha))
    return ExpSumSample(alpha=alpha, value=complex(np.sum(terms)), N=N)


def exp_sum_grid(sieve: PrimeSieve, N: int, M: int) -> np.ndarray:
    """
    S(m/M) for m = 0..M-1 from one DFT of the odd-prime indicator.

    numpy's forward transform carries exp(-2 pi i k n / M), so S is its conjugate.
    """
    _check_n(sieve, N)
    if M <= N:
        raise OutOfRangeError("M", M, f"M > N={N}")
    return np.conj(np.fft.fft(sieve.odd_prime_indicator(N), M))


def rep_count_via_orthogonality(sieve: PrimeSieve, N: int, M: int) -> int:
    """
    Ordered Goldbach count as (1/M) sum_m S(m/M)^2 exp(-2 pi i m N / M).

    With M >= 2N no sum p1 + p2 <= 2N other than N itself is congruent to N mod M.

    Raises:
        OutOfRangeError: If M < 2N
        RoundingResidueError: If the sum is more than 1e-3 away from an integer
    """
    if M < 2 * N:
        raise OutOfRangeError("M", M, f"M >= 2N={2 * N}")
    s = exp_sum_grid(sieve, N, M)
    m = np.arange(M, dtype=np.int64)
    twiddle = np.exp(-2j * np.pi * ((m * N) % M) / M)
    total = complex(np.sum(s * s * twiddle)) / M

    count = round(total.real)
    residue = abs(total - count)
    if residue > ROUNDING_RESIDUE_LIMIT:
        orthogonality_checks_total.labels(status="residue").inc()
        raise RoundingResidueError(total, residue, ROUNDING_RESIDUE_LIMIT)
    orthogonality_checks_total.labels(status="ok").inc()
    logger.debug("orthogonality_count", N=N, M=M, count=count, residue=residue)
    return int(count)


def lemma4_probe(sieve: PrimeSieve, N: int, grid: int) -> float:
    """
    Riemann-sum estimate of the integral of |S_alpha| over [0, 1).

    The double sum of exp(2 pi i alpha (p' - p)) is |S_alpha|^2, so its square root is
    |S_alpha| and the estimate is the grid mean of |S|.

    Raises:
        OutOfRangeError: If grid < 4N
    """
    if grid < 4 * N:
        raise OutOfRangeError("grid", grid, f"grid >= 4N={4 * N}")
    return float(np.mean(np.abs(exp_sum_grid(sieve, N, grid))))


@dataclass(frozen=True)
class MinorArcReport:
    """Largest observed |S_alpha| / S(q, delta) over sampled minor-arc points."""

    N: int
    samples: int
    max_ratio: float
    alpha: float
    q: int
    delta: float


def minor_arc_ratios(
    sieve: PrimeSieve, params: ArcParams, samples: int, eps: float, seed: int
) -> MinorArcReport:
    """
    Sample alpha uniformly on the minor arcs and compare |S_alpha| with the envelope.

    Points are drawn uniformly on [0, 1) and kept when they classify as MINOR; at most
    100 draws per requested sample are made, so a circle covered by major arcs yields
    a report with zero samples.
    """
    if samples < 1:
        raise OutOfRangeError("samples", samples, "samples >= 1")
    _check_n(sieve, params.N)
    rng = np.random.default_rng(seed)

    kept = 0
    best = MinorArcReport(params.N, 0, 0.0, 0.0, 1, 0.0)
    for alpha in rng.random(100 * samples).tolist():
        label = classify_alpha(params, alpha)
        if label.arc_class is not ArcClass.MINOR:
            continue
        z = (alpha - label.center + 0.5) % 1.0 - 0.5
        delta = abs(z) * params.N
        value = abs(exp_sum_primes(sieve, params.N, alpha).value)
        ratio = value / minor_bound(params, label.q, delta, eps)
        kept += 1
        if ratio > best.max_ratio:
            best = MinorArcReport(params.N, kept, ratio, alpha, label.q, delta)
        if kept == samples:
            break

    logger.info("minor_arcs_sampled", N=params.N, samples=kept, max_ratio=best.max_ratio)
    return MinorArcReport(params.N, kept, best.max_ratio, best.alpha, best.q, best.delta)
