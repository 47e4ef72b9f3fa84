"""The singular-series formulas under comparison, plus the Hardy-Littlewood reference."""

import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

from src.core.exceptions import OddInputError, OutOfRangeError
from src.primes.arithmetic import Factorization, factorize
from src.primes.sieve import PrimeSieve, primes_upto
from src.series.base import CoefficientMode, SeriesTag, SeriesVariant, SingularSeriesValue
from src.series.ramanujan import g_of_q_table

# products with more factors than this are accumulated as a sum of logarithms
LOG_SPACE_THRESHOLD = 10_000


def accumulate_product(factors: np.ndarray) -> float:
    """Product of factors in ascending-prime order; exact zero if any factor is zero."""
    if factors.size == 0:
        return 1.0
    if np.any(factors == 0):
        return 0.0
    if factors.size > LOG_SPACE_THRESHOLD and np.all(factors > 0):
        return float(np.exp(np.sum(np.log(factors))))
    return float(np.prod(factors))


def _prime_coefficients(primes: np.ndarray, N: int, mode: CoefficientMode) -> np.ndarray:
    """G(p) for primes p: c_p(N) is p-1 when p | N and -1 otherwise, mu(p) = -1."""
    p = primes.astype(np.float64)
    c = np.where(N % primes == 0, p - 1.0, -1.0)
    coeff = -1.0 if mode is CoefficientMode.MU_AS_WRITTEN else 1.0
    return coeff * c / ((p - 1.0) * (p - 1.0))


def series_sum_over_q(
    sieve: PrimeSieve, N: int, Q: int, mode: CoefficientMode
) -> SingularSeriesValue:
    """Partial sum of G(q) over 1 <= q <= Q."""
    g = g_of_q_table(sieve, N, Q, mode)
    nonzero = np.flatnonzero(g)
    tail = abs(float(g[nonzero[-1]])) if nonzero.size else 0.0
    return SingularSeriesValue(
        N=N,
        variant=SeriesVariant(SeriesTag.SUM_OVER_Q, mode),
        value=float(np.sum(g)),
        truncation=Q,
        tail_note=tail,
    )


def series_product_over_p(
    sieve: PrimeSieve, N: int, P: int, mode: CoefficientMode
) -> SingularSeriesValue:
    """
    Product of (1 + G(p)) over primes p <= P.

    A zero factor gives the value 0, which is reported rather than raised: for even N
    the MU_AS_WRITTEN factor at p = 2 is exactly 0.
    """
    if P < 2:
        raise OutOfRangeError("P", P, "P >= 2")
    g = _prime_coefficients(primes_upto(sieve, P), N, mode)
    return SingularSeriesValue(
        N=N,
        variant=SeriesVariant(SeriesTag.PRODUCT_OVER_P, mode),
        value=accumulate_product(1.0 + g),
        truncation=P,
        tail_note=abs(float(g[-1])),
    )


def series_paper_closed(sieve: PrimeSieve, N: int, P: int) -> SingularSeriesValue:
    """
    3 * prod_{p not | N} (1 + 1/p^2) * prod_{p | N} (1 - 2/(p^2 + 1)), over p <= P.
    """
    if P < 2:
        raise OutOfRangeError("P", P, "P >= 2")
    if N % 2:
        raise OddInputError("N", N)
    primes = primes_upto(sieve, P)
    p2 = primes.astype(np.float64) ** 2
    factors = np.where(N % primes == 0, 1.0 - 2.0 / (p2 + 1.0), 1.0 + 1.0 / p2)
    return SingularSeriesValue(
        N=N,
        variant=SeriesVariant(SeriesTag.PAPER_CLOSED),
        value=3.0 * accumulate_product(factors),
        truncation=P,
        tail_note=abs(float(factors[-1]) - 1.0),
    )


def series_paper_divisor(f: Factorization) -> SingularSeriesValue:
    """prod over distinct primes p | N of p/(p-1), exact rational rounded once."""
    N = f.n
    if N < 2 or N % 2:
        raise OutOfRangeError("N", N, "even N >= 2")
    value = Fraction(1)
    for p in f.primes:
        value *= Fraction(p, p - 1)
    largest = f.primes[-1]
    return SingularSeriesValue(
        N=N,
        variant=SeriesVariant(SeriesTag.PAPER_DIVISOR),
        value=float(value),
        truncation=largest,
        tail_note=1.0 / (largest - 1),
    )


@lru_cache(maxsize=8)
def twin_prime_constant(sieve: PrimeSieve, P: int) -> float:
    """C2(P) = prod over 2 < p <= P of (1 - 1/(p-1)^2)."""
    if P < 3:
        raise OutOfRangeError("P", P, "P >= 3")
    p = primes_upto(sieve, P)[1:].astype(np.float64)
    return accumulate_product(1.0 - 1.0 / ((p - 1.0) * (p - 1.0)))


def series_hardy_littlewood(sieve: PrimeSieve, f: Factorization, P: int) -> SingularSeriesValue:
    """2 * C2(P) * prod over odd p | N of (p-1)/(p-2)."""
    N = f.n
    if N % 2:
        raise OddInputError("N", N)
    if P < 3:
        raise OutOfRangeError("P", P, "P >= 3")
    value = 2.0 * twin_prime_constant(sieve, P)
    for p in f.primes:
        if p > 2:
            value *= (p - 1) / (p - 2)
    last = float(primes_upto(sieve, P)[-1])
    return SingularSeriesValue(
        N=N,
        variant=SeriesVariant(SeriesTag.HARDY_LITTLEWOOD),
        value=value,
        truncation=P,
        tail_note=1.0 / ((last - 1.0) * (last - 1.0)),
    )


def evaluate_variant(
    sieve: PrimeSieve, N: int, variant: SeriesVariant, P: int, Q: int
) -> SingularSeriesValue:
    """Evaluate one variant at N with prime bound P and modulus bound Q."""
    tag = variant.tag
    if tag is SeriesTag.SUM_OVER_Q:
        assert variant.mode is not None
        return series_sum_over_q(sieve, N, Q, variant.mode)
    if tag is SeriesTag.PRODUCT_OVER_P:
        assert variant.mode is not None
        return series_product_over_p(sieve, N, P, variant.mode)
    if tag is SeriesTag.PAPER_CLOSED:
        return series_paper_closed(sieve, N, P)
    if tag is SeriesTag.PAPER_DIVISOR:
        return series_paper_divisor(factorize(sieve, N))
    return series_hardy_littlewood(sieve, factorize(sieve, N), P)


def claimed_bounds(value: SingularSeriesValue) -> dict[str, bool]:
    """The lower bounds S > 1 and S > 2 asserted for the closed forms."""
    return {"S>1": value.value > 1.0, "S>2": value.value > 2.0}


def main_term_scale(N: int) -> float:
    """N / r^2 with r = ln N."""
    r = math.log(N)
    return N / (r * r)
