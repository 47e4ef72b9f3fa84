"""Ramanujan sums c_q(N) and the major-arc coefficient G(q)."""

import cmath
import math

import numpy as np

from src.core.exceptions import OutOfRangeError
from src.primes.arithmetic import (
    MultiplicativeTables,
    euler_phi,
    factorize,
    mobius,
    multiplicative_tables,
)
from src.primes.sieve import PrimeSieve, sieve_covering
from src.series.base import CoefficientMode


def ramanujan_sum(sieve: PrimeSieve, q: int, N: int) -> int:
    """
    c_q(N) = sum over 1 <= a <= q, gcd(a, q) = 1 of exp(2 pi i a N / q).

    Evaluated exactly as mu(q/g) * phi(q) / phi(q/g) with g = gcd(q, N).
    """
    if q < 1:
        raise OutOfRangeError("q", q, "q >= 1")
    g = math.gcd(q, N)
    reduced = factorize(sieve, q // g)
    return mobius(reduced) * euler_phi(factorize(sieve, q)) // euler_phi(reduced)


def ramanujan_sum_direct(q: int, N: int) -> complex:
    """Direct complex summation of c_q(N); the oracle for the closed form."""
    if q < 1:
        raise OutOfRangeError("q", q, "q >= 1")
    return sum(
        (
            cmath.exp(2j * math.pi * ((a * N) % q) / q)
            for a in range(1, q + 1)
            if math.gcd(a, q) == 1
        ),
        0j,
    )


def g_of_q(sieve: PrimeSieve, q: int, N: int, mode: CoefficientMode) -> float:
    """
    G(q) = coeff(q) * c_q(N) / phi(q)^2.

    MU_AS_WRITTEN uses coeff = mu(q) exactly as the coefficient is printed; MU_SQUARED
    uses mu(q)^2, the coefficient produced by squaring the major-arc approximation of the
    prime exponential sum. Both vanish exactly on non-squarefree q.
    """
    if q < 1:
        raise OutOfRangeError("q", q, "q >= 1")
    f = factorize(sieve, q)
    mu = mobius(f)
    if mu == 0:
        return 0.0
    coeff = mu if mode is CoefficientMode.MU_AS_WRITTEN else mu * mu
    phi = euler_phi(f)
    return coeff * ramanujan_sum(sieve, q, N) / (phi * phi)


def tables_for(sieve: PrimeSieve, q_max: int) -> MultiplicativeTables:
    """mu/phi tables up to q_max, sieving further when the given sieve is too short."""
    return multiplicative_tables(sieve_covering(sieve, q_max), q_max)


def g_of_q_table(sieve: PrimeSieve, N: int, Q: int, mode: CoefficientMode) -> np.ndarray:
    """G(q) for q = 1..Q as a float array (index 0 holds q = 1)."""
    if Q < 1:
        raise OutOfRangeError("Q", Q, "Q >= 1")
    tables = tables_for(sieve, Q)
    mu = tables.mobius.astype(np.int64)
    phi = tables.totient
    q = np.arange(1, Q + 1, dtype=np.int64)
    reduced = q // np.gcd(q, N)
    c = mu[reduced] * phi[q] // phi[reduced]
    coeff = mu[q] if mode is CoefficientMode.MU_AS_WRITTEN else mu[q] * mu[q]
    phi_q = phi[q].astype(np.float64)
    return (coeff * c).astype(np.float64) / (phi_q * phi_q)
