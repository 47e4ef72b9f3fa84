"""Run configuration and output row models for the command-line front end."""

from pathlib import Path
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, ValidationInfo, field_validator, model_validator

from src.core.exceptions import DomainError
from src.series.base import CoefficientMode, SeriesVariant


class RunConfig(BaseModel):
    """
    Everything a subcommand needs, resolved from flags over settings.

    ``n_max`` defaults to the largest even number not above ``limit``.
    """

    model_config = ConfigDict(frozen=True)

    limit: int = Field(ge=2)
    n_min: int = 6
    n_max: int
    step: int = 2
    mode: CoefficientMode = CoefficientMode.MU_SQUARED
    variants: list[str] = Field(default_factory=lambda: ["PAPER_CLOSED"])
    trunc_p: int = Field(default=100_000, ge=3)
    trunc_q: int = Field(default=100_000, ge=1)
    tau_c: float = Field(default=7.0, ge=2.0)
    lemma3_tau_c: float = Field(default=2.0, ge=2.0)
    tol: float = Field(default=1e-6, gt=0)
    output_format: Literal["csv", "json"] = "csv"
    cache: Path | None = None
    workers: int = Field(default=1, ge=1)
    seed: int = 20130806
    verbose: bool = False

    # single-N commands and probes
    n: int | None = None
    grid: int | None = Field(default=None, ge=1)
    samples: int = Field(default=20, ge=1)
    eps: float = Field(default=0.0, ge=0.0)
    pairs: bool = False
    list_arcs: bool = False

    @field_validator("variants")
    @classmethod
    def canonical_variants(cls, v: list[str], info: ValidationInfo) -> list[str]:
        """Normalise to ``TAG`` / ``TAG:mode`` labels, applying ``mode`` where missing."""
        if not v:
            raise ValueError("at least one variant is required")
        mode = info.data.get("mode", CoefficientMode.MU_SQUARED)
        try:
            return [SeriesVariant.parse(text, mode).label for text in v]
        except DomainError as e:
            raise ValueError(str(e)) from e

    @model_validator(mode="before")
    @classmethod
    def default_n_max(cls, data: Any) -> Any:
        if not isinstance(data, dict) or data.get("n_max") is not None:
            return data
        limit = data.get("limit")
        if isinstance(limit, int):
            data = {**data, "n_max": limit - limit % 2}
        return data

    @model_validator(mode="after")
    def check_range(self) -> "RunConfig":
        if not 6 <= self.n_min <= self.n_max <= self.limit:
            raise ValueError(
                f"need 6 <= n_min <= n_max <= limit, got {self.n_min}, {self.n_max}, {self.limit}"
            )
        if self.n_min % 2 or self.n_max % 2:
            raise ValueError("n_min and n_max must be even")
        if self.step < 2 or self.step % 2:
            raise ValueError(f"step must be even and >= 2, got {self.step}")
        return self

    @property
    def series_variants(self) -> list[SeriesVariant]:
        return [SeriesVariant.parse(label) for label in self.variants]

    @property
    def n_values(self) -> range:
        return range(self.n_min, self.n_max + 1, self.step)


class ComparisonRow(BaseModel):
    """
    Exact counts at N against the series-variant and Hardy-Littlewood predictions.

    Ratios are exact / predicted and are None when the prediction is 0. The last three
    fields are only filled in verbose runs.
    """

    model_config = ConfigDict(frozen=True)

    N: int
    r_ordered: int
    r_unordered: int
    pred_paper: float
    pred_hl: float
    ratio_paper: float | None
    ratio_hl: float | None
    variant: str
    ratio_paper_unordered: float | None = None
    pred_hl_integral: float | None = None
    ratio_hl_integral: float | None = None


HEADLINE_COLUMNS: tuple[str, ...] = (
    "N",
    "r_ordered",
    "r_unordered",
    "pred_paper",
    "pred_hl",
    "ratio_paper",
    "ratio_hl",
    "variant",
)

VERBOSE_COLUMNS: tuple[str, ...] = HEADLINE_COLUMNS + (
    "ratio_paper_unordered",
    "pred_hl_integral",
    "ratio_hl_integral",
)

RATIO_COLUMNS: tuple[str, ...] = ("ratio_paper", "ratio_hl", "ratio_hl_integral")
