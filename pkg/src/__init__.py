"""Goldbach laboratory: exact representation counts checked against circle-method predictions."""

__version__ = "1.0.0"
