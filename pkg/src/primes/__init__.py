"""Prime sieve, counting, factorization and multiplicative functions."""

from src.primes.arithmetic import (
    Factorization,
    MultiplicativeTables,
    euler_phi,
    factorize,
    mobius,
    multiplicative_tables,
)
from src.primes.cache import load_sieve, save_sieve
from src.primes.counting import log_integral, pnt_ratio, prime_count, prime_count_ap
from src.primes.sieve import PrimeSieve, build_sieve, primes_upto, sieve_covering

__all__ = [
    "PrimeSieve",
    "build_sieve",
    "sieve_covering",
    "primes_upto",
    "save_sieve",
    "load_sieve",
    "Factorization",
    "MultiplicativeTables",
    "factorize",
    "mobius",
    "euler_phi",
    "multiplicative_tables",
    "prime_count",
    "prime_count_ap",
    "log_integral",
    "pnt_ratio",
]
