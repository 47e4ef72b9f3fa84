"""Singular-series variant tags, coefficient modes and result records."""

import math
from dataclasses import dataclass
from enum import StrEnum

from src.core.exceptions import OutOfRangeError


class SeriesTag(StrEnum):
    """The singular-series formulas under comparison."""

    PAPER_CLOSED = "PAPER_CLOSED"
    PAPER_DIVISOR = "PAPER_DIVISOR"
    SUM_OVER_Q = "SUM_OVER_Q"
    PRODUCT_OVER_P = "PRODUCT_OVER_P"
    HARDY_LITTLEWOOD = "HARDY_LITTLEWOOD"

    @property
    def uses_mode(self) -> bool:
        """Whether the variant is built from G(q) and therefore needs a coefficient mode."""
        return self in (SeriesTag.SUM_OVER_Q, SeriesTag.PRODUCT_OVER_P)


class CoefficientMode(StrEnum):
    """Coefficient of c_q(N)/phi(q)^2 in G(q): mu(q) as printed, or mu(q)^2."""

    MU_AS_WRITTEN = "mu"
    MU_SQUARED = "mu2"


@dataclass(frozen=True)
class SeriesVariant:
    tag: SeriesTag
    mode: CoefficientMode | None = None

    def __post_init__(self) -> None:
        if self.tag.uses_mode and self.mode is None:
            raise OutOfRangeError("mode", self.mode, f"a coefficient mode for {self.tag}")
        if not self.tag.uses_mode and self.mode is not None:
            # closed forms ignore the mode
            object.__setattr__(self, "mode", None)

    @property
    def label(self) -> str:
        return self.tag.value if self.mode is None else f"{self.tag.value}:{self.mode.value}"

    @classmethod
    def parse(cls, text: str, default_mode: CoefficientMode | None = None) -> "SeriesVariant":
        """
        Parse ``TAG`` or ``TAG:mode`` (mode one of mu, mu2).

        Raises:
            OutOfRangeError: On unknown tags or modes
        """
        name, _, mode_text = text.strip().partition(":")
        try:
            tag = SeriesTag(name.upper())
        except ValueError as e:
            raise OutOfRangeError("variant", text, f"one of {[t.value for t in SeriesTag]}") from e
        mode: CoefficientMode | None = None
        if mode_text:
            try:
                mode = CoefficientMode(mode_text.lower())
            except ValueError as e:
                raise OutOfRangeError("mode", mode_text, "mu or mu2") from e
        elif tag.uses_mode:
            mode = default_mode or CoefficientMode.MU_SQUARED
        return cls(tag=tag, mode=mode)


ALL_VARIANTS: tuple[SeriesVariant, ...] = (
    SeriesVariant(SeriesTag.PAPER_CLOSED),
    SeriesVariant(SeriesTag.PAPER_DIVISOR),
    SeriesVariant(SeriesTag.SUM_OVER_Q, CoefficientMode.MU_AS_WRITTEN),
    SeriesVariant(SeriesTag.SUM_OVER_Q, CoefficientMode.MU_SQUARED),
    SeriesVariant(SeriesTag.PRODUCT_OVER_P, CoefficientMode.MU_AS_WRITTEN),
    SeriesVariant(SeriesTag.PRODUCT_OVER_P, CoefficientMode.MU_SQUARED),
    SeriesVariant(SeriesTag.HARDY_LITTLEWOOD),
)


@dataclass(frozen=True)
class SingularSeriesValue:
    """
    One evaluation of S(N).

    ``truncation`` is the prime bound P or modulus bound Q; ``tail_note`` is the magnitude
    of the last included term, a convergence indicator.
    """

    N: int
    variant: SeriesVariant
    value: float
    truncation: int
    tail_note: float

    def __post_init__(self) -> None:
        if self.truncation < 2 and not (
            self.variant.tag is SeriesTag.SUM_OVER_Q and self.truncation == 1
        ):
            raise ValueError(f"truncation {self.truncation} < 2")
        if not math.isfinite(self.value):
            raise ValueError(f"non-finite series value {self.value}")
