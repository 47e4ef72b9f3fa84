"""Core exceptions and shared numerical machinery."""

from src.core.exceptions import (
    ArcError,
    ArcOverlapError,
    CacheWriteError,
    ConvolutionMismatchError,
    CorruptedCacheError,
    DomainError,
    GoldbachLabError,
    InconsistentCountError,
    NotOddPrimeError,
    NumericalError,
    OddInputError,
    OutOfRangeError,
    QuadratureError,
    RoundingResidueError,
    SieveCacheError,
)

__all__ = [
    "GoldbachLabError",
    "DomainError",
    "NumericalError",
    "ArcError",
    "SieveCacheError",
    "OutOfRangeError",
    "NotOddPrimeError",
    "OddInputError",
    "InconsistentCountError",
    "RoundingResidueError",
    "QuadratureError",
    "ConvolutionMismatchError",
    "ArcOverlapError",
    "CorruptedCacheError",
    "CacheWriteError",
]
