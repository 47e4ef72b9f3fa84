"""Application configuration management using pydantic-settings."""

from functools import lru_cache
from pathlib import Path
from typing import Literal

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Laboratory settings loaded from environment variables or an env-style config file."""

    model_config = SettingsConfigDict(
        env_file=".env", env_prefix="GOLDBACH_", case_sensitive=True, extra="ignore"
    )

    # Application
    APP_NAME: str = "goldbach-lab"
    APP_VERSION: str = "1.0.0"
    DEBUG: bool = False
    LOG_LEVEL: Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"] = "WARNING"

    # Sieve
    SIEVE_LIMIT: int = 1_000_000
    SIEVE_SEGMENT_SIZE: int = Field(default=1 << 18, description="Odd numbers per segment")

    # Singular series truncation
    TRUNCATION_P: int = 100_000
    TRUNCATION_Q: int = 100_000

    # Circle method
    TAU_EXPONENT: float = 7.0
    LEMMA3_TAU_EXPONENT: float = 2.0
    QUADRATURE_TOL: float = 1e-6
    QUADRATURE_ORDER: int = 16

    # Goldbach counting
    CONVOLUTION_THRESHOLD: int = 1 << 15
    FFT_VERIFY_FRACTION: float = 0.01
    RANDOM_SEED: int = 20130806

    # Execution
    WORKERS: int = 1
    METRICS_FILE: Path | None = None

    @field_validator("SIEVE_SEGMENT_SIZE")
    @classmethod
    def validate_segment_size(cls, v: int) -> int:
        """Segments are packed into whole bytes."""
        if v <= 0 or v % 8 != 0:
            raise ValueError("SIEVE_SEGMENT_SIZE must be a positive multiple of 8")
        return v

    @field_validator("FFT_VERIFY_FRACTION")
    @classmethod
    def validate_verify_fraction(cls, v: float) -> float:
        if not 0.0 < v <= 1.0:
            raise ValueError("FFT_VERIFY_FRACTION must lie in (0, 1]")
        return v

    @field_validator("WORKERS", "QUADRATURE_ORDER")
    @classmethod
    def validate_positive(cls, v: int) -> int:
        if v < 1:
            raise ValueError("value must be at least 1")
        return v

    @field_validator("QUADRATURE_TOL")
    @classmethod
    def validate_tolerance(cls, v: float) -> float:
        if v <= 0:
            raise ValueError("QUADRATURE_TOL must be positive")
        return v

    @field_validator("TAU_EXPONENT", "LEMMA3_TAU_EXPONENT")
    @classmethod
    def validate_tau_exponent(cls, v: float) -> float:
        """The window around 0 needs c >= 2."""
        if v < 2:
            raise ValueError("tau exponent must be >= 2")
        return v


_installed: Settings | None = None


@lru_cache()
def get_settings() -> Settings:
    """Process-wide settings: the installed config file if any, else the environment."""
    return _installed if _installed is not None else Settings()


def load_settings(config_path: Path | None = None) -> Settings:
    """
    Load settings, reading ``config_path`` as an env file when given.

    A loaded file becomes the process-wide settings, so every later ``get_settings()``
    call (sieve segments, convolution threshold, quadrature order, logging) sees it.
    """
    global _installed
    if config_path is None:
        return get_settings()
    _installed = Settings(_env_file=config_path)  # type: ignore[call-arg]
    get_settings.cache_clear()
    return get_settings()


def reset_settings() -> None:
    """Drop an installed config file and re-read the environment on next access."""
    global _installed
    _installed = None
    get_settings.cache_clear()
