"""Structured logging for the laboratory, rendered by structlog on standard error."""

import logging
import sys
from typing import Any

import numpy as np
import structlog
from structlog.types import EventDict, Processor

from src.config import get_settings


def add_lab_context(logger: Any, method_name: str, event_dict: EventDict) -> EventDict:
    """Stamp every event with the tool name and version."""
    settings = get_settings()
    event_dict["app"] = settings.APP_NAME
    event_dict["version"] = settings.APP_VERSION
    return event_dict


def coerce_numpy_values(logger: Any, method_name: str, event_dict: EventDict) -> EventDict:
    """Turn numpy scalars into Python numbers so the JSON renderer accepts them."""
    for key, value in event_dict.items():
        if isinstance(value, np.generic):
            event_dict[key] = value.item()
    return event_dict


def configure_logging(level: str | None = None, debug: bool | None = None) -> None:
    """
    Route structlog through the stdlib root logger on standard error.

    Standard output carries result tables only, so nothing here ever writes to it.

    Args:
        level: Log level name, defaults to LOG_LEVEL
        debug: Console renderer instead of JSON lines, defaults to DEBUG
    """
    settings = get_settings()
    level = level or settings.LOG_LEVEL
    debug = settings.DEBUG if debug is None else debug

    logging.basicConfig(format="%(message)s", stream=sys.stderr, level=level, force=True)

    processors: list[Processor] = [
        structlog.contextvars.merge_contextvars,
        structlog.stdlib.filter_by_level,
        structlog.stdlib.add_logger_name,
        structlog.stdlib.add_log_level,
        structlog.processors.TimeStamper(fmt="iso"),
        structlog.processors.format_exc_info,
        add_lab_context,
        coerce_numpy_values,
    ]
    renderer = structlog.dev.ConsoleRenderer() if debug else structlog.processors.JSONRenderer()

    structlog.configure(
        processors=[*processors, renderer],
        wrapper_class=structlog.stdlib.BoundLogger,
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=False,
    )


def bind_command(command: str) -> None:
    """Attach the running subcommand to every event logged until the next call."""
    structlog.contextvars.clear_contextvars()
    structlog.contextvars.bind_contextvars(command=command)


def get_logger(name: str) -> structlog.stdlib.BoundLogger:
    """Get a structured logger instance."""
    return structlog.get_logger(name)
