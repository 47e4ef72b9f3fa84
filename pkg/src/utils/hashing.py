"""SHA-256 fingerprints for sieve caches and emitted result tables."""

import hashlib
from pathlib import Path

CHUNK_SIZE = 1 << 16


def file_digest(path: Path, algorithm: str = "sha256") -> str:
    """
    Hex digest of a file on disk, read in chunks.

    Used to fingerprint sieve caches so a run log can tell two caches apart.
    """
    digest = hashlib.new(algorithm)
    with open(path, "rb") as stream:
        for chunk in iter(lambda: stream.read(CHUNK_SIZE), b""):
            digest.update(chunk)
    return digest.hexdigest()


def table_digest(text: str, algorithm: str = "sha256") -> str:
    """Hex digest of a rendered result table (UTF-8)."""
    return hashlib.new(algorithm, text.encode("utf-8")).hexdigest()
