"""Tests for the structlog setup."""

import json
import logging

import numpy as np
import pytest
import structlog

from src.utils.logging import bind_command, coerce_numpy_values, configure_logging, get_logger


@pytest.fixture(autouse=True)
def reset_logging():
    yield
    structlog.reset_defaults()
    structlog.contextvars.clear_contextvars()
    logging.getLogger().handlers.clear()


class TestLogging:
    def test_numpy_scalars_become_python(self):
        event = coerce_numpy_values(None, "info", {"count": np.int64(7), "ratio": np.float64(0.5)})
        assert type(event["count"]) is int
        assert type(event["ratio"]) is float

    def test_json_lines_on_stderr(self, capsys):
        configure_logging("INFO", debug=False)
        bind_command("sieve")
        get_logger("test").info("sieve_built", limit=np.int64(100))
        captured = capsys.readouterr()
        assert captured.out == ""
        record = json.loads(captured.err.strip().splitlines()[-1])
        assert record["event"] == "sieve_built"
        assert record["limit"] == 100
        assert record["command"] == "sieve"
        assert record["app"] == "goldbach-lab"

    def test_level_filters(self, capsys):
        configure_logging("ERROR", debug=False)
        get_logger("test").info("quiet")
        assert "quiet" not in capsys.readouterr().err
