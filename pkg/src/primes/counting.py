"""Prime counting, globally and in arithmetic progressions, and the logarithmic integral."""

import math

import numpy as np

from src.core.exceptions import OutOfRangeError
from src.core.quadrature import integrate
from src.primes.sieve import PrimeSieve


def prime_count(sieve: PrimeSieve, x: int) -> int:
    """pi(x) for 2 <= x <= limit."""
    if not 2 <= x <= sieve.limit:
        raise OutOfRangeError("x", x, f"2 <= x <= limit={sieve.limit}")
    return int(np.searchsorted(sieve.primes, x, side="right"))


def prime_count_ap(sieve: PrimeSieve, N: int, q: int, a: int) -> int:
    """
    pi(N; q, a): primes p <= N with p = a (mod q).

    gcd(q, a) > 1 is allowed; the count is then 0 or 1.
    """
    if q < 1:
        raise OutOfRangeError("q", q, "q >= 1")
    if not 0 <= a < q:
        raise OutOfRangeError("a", a, f"0 <= a < q={q}")
    if not 0 <= N <= sieve.limit:
        raise OutOfRangeError("N", N, f"0 <= N <= limit={sieve.limit}")
    primes = sieve.primes[: np.searchsorted(sieve.primes, N, side="right")]
    return int(np.count_nonzero(primes % q == a))


def log_integral(x: float, tol: float = 1e-6) -> float:
    """
    Li(x) = integral of dt/ln t from 2 to x.

    The lower limit is 2, not 0: this is the offset integral, not principal-value li.
    """
    if x < 2:
        raise OutOfRangeError("x", x, "x >= 2")
    if tol <= 0:
        raise OutOfRangeError("tol", tol, "tol > 0")
    if x == 2:
        return 0.0
    return integrate(lambda t: 1.0 / np.log(t), 2.0, float(x), tol).real


def pnt_ratio(sieve: PrimeSieve, x: int) -> float:
    """pi(x) * ln x / x, which tends to 1."""
    return prime_count(sieve, x) * math.log(x) / x
