"""Logging, metrics and hashing helpers."""

from src.utils.hashing import file_digest, table_digest
from src.utils.logging import configure_logging, get_logger
from src.utils.metrics import write_metrics

__all__ = [
    "configure_logging",
    "file_digest",
    "get_logger",
    "table_digest",
    "write_metrics",
]
