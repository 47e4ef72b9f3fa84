"""Binary sieve cache: ``GBSV`` magic, version byte, u64 limit, odd-only bitmap."""

import os
import struct
from pathlib import Path

import numpy as np

from src.core.exceptions import CacheWriteError, CorruptedCacheError
from src.primes.sieve import PrimeSieve, build_sieve
from src.utils.hashing import file_digest
from src.utils.logging import get_logger
from src.utils.metrics import sieve_cache_operations_total

logger = get_logger(__name__)

MAGIC = b"GBSV"
VERSION = 0x01
HEADER = struct.Struct("<4sBQ")
SPOT_CHECK_LIMIT = 10_000


def save_sieve(sieve: PrimeSieve, path: Path) -> str:
    """
    Write ``sieve`` to ``path`` atomically.

    Returns:
        sha256 of the written file

    Raises:
        CacheWriteError: If the file cannot be written
    """
    path = Path(path)
    tmp = path.with_name(path.name + ".tmp")
    try:
        with open(tmp, "wb") as file:
            file.write(HEADER.pack(MAGIC, VERSION, sieve.limit))
            file.write(sieve.bitmap.tobytes())
        os.replace(tmp, path)
    except OSError as e:
        sieve_cache_operations_total.labels(operation="write", status="error").inc()
        logger.error("sieve_cache_write_failed", path=str(path), error=str(e))
        raise CacheWriteError(str(path), str(e)) from e

    digest = file_digest(path)
    sieve_cache_operations_total.labels(operation="write", status="ok").inc()
    logger.info("sieve_cache_written", path=str(path), limit=sieve.limit, sha256=digest)
    return digest


def load_sieve(path: Path) -> PrimeSieve:
    """
    Read and validate a sieve cache.

    Validation checks the header, the payload length, zero padding, and that the cached
    bits for n <= 10^4 match a freshly computed sieve (including the popcount-derived
    prime count).

    Raises:
        CorruptedCacheError: If any check fails or the file is unreadable
    """
    path = Path(path)
    try:
        data = path.read_bytes()
    except OSError as e:
        sieve_cache_operations_total.labels(operation="read", status="error").inc()
        raise CorruptedCacheError(str(path), f"unreadable ({e})") from e

    def fail(reason: str) -> CorruptedCacheError:
        sieve_cache_operations_total.labels(operation="read", status="corrupt").inc()
        logger.error("sieve_cache_invalid", path=str(path), reason=reason)
        return CorruptedCacheError(str(path), reason)

    if len(data) < HEADER.size:
        raise fail("truncated header")
    magic, version, limit = HEADER.unpack_from(data)
    if magic != MAGIC:
        raise fail(f"bad magic {magic!r}")
    if version != VERSION:
        raise fail(f"unsupported version {version}")
    if limit < 2:
        raise fail(f"limit {limit} < 2")

    odd_count = (limit + 1) // 2
    payload = np.frombuffer(data, dtype=np.uint8, offset=HEADER.size)
    if payload.size != -(-odd_count // 8):
        raise fail(f"payload has {payload.size} bytes, expected {-(-odd_count // 8)}")

    bits = np.unpackbits(payload, bitorder="little")
    if bits[odd_count:].any():
        raise fail("non-zero padding bits")
    bits = bits[:odd_count].astype(bool)

    spot = min(limit, SPOT_CHECK_LIMIT)
    reference = build_sieve(spot)
    spot_bits = bits[: (spot + 1) // 2]
    if int(spot_bits.sum()) + 1 != reference.primes.size:
        raise fail(f"pi({spot}) from cache differs from recomputed {reference.primes.size}")
    expected = np.unpackbits(reference.bitmap, bitorder="little")[: spot_bits.size].astype(bool)
    if not np.array_equal(spot_bits, expected):
        raise fail(f"primality bits differ from recomputed sieve below {spot}")

    primes = np.concatenate(
        [np.array([2], dtype=np.int64), 2 * np.flatnonzero(bits).astype(np.int64) + 1]
    )
    sieve = PrimeSieve(limit=int(limit), bitmap=payload.copy(), primes=primes)

    sieve_cache_operations_total.labels(operation="read", status="ok").inc()
    logger.info(
        "sieve_cache_loaded",
        path=str(path),
        limit=sieve.limit,
        prime_count=int(primes.size),
        sha256=file_digest(path),
    )
    return sieve
