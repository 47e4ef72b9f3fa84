"""Major/minor arc dissection of the unit circle.

Major arcs are the intervals of half-width 1/tau around the reduced fractions a/q with
q < r^2; the minor arcs are what is left over. Centres are enumerated in Farey order, so
neighbouring centres a/q < a'/q' are exactly 1/(q q') apart and overlap is decided by
integer comparison.
"""

import math
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction

from src.core.exceptions import ArcOverlapError, OutOfRangeError
from src.utils.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class ArcParams:
    """Dissection parameters at N: r = ln N, tau = N r^-c, major denominators q < r^2."""

    N: int
    c: float
    r: float
    tau: float
    q_major_bound: float

    @classmethod
    def from_n(cls, N: int, c: float) -> "ArcParams":
        """
        Raises:
            OutOfRangeError: If N < 3 or c < 2
        """
        if N < 3:
            raise OutOfRangeError("N", N, "N >= 3")
        if c < 2:
            raise OutOfRangeError("c", c, "c >= 2")
        r = math.log(N)
        return cls(N=N, c=c, r=r, tau=N * r**-c, q_major_bound=r * r)

    @property
    def q_max(self) -> int:
        """Largest integer q with q < r^2."""
        return math.ceil(self.q_major_bound) - 1

    @property
    def halfwidth(self) -> float:
        return 1.0 / self.tau


class ArcClass(StrEnum):
    MAJOR = "MAJOR"
    MINOR = "MINOR"


@dataclass(frozen=True)
class ArcLabel:
    """An arc centred on a/q; ``arc_class`` is MAJOR iff q < r^2."""

    a: int
    q: int
    arc_class: ArcClass
    center: float
    halfwidth: float

    def to_dict(self) -> dict[str, int | float | str]:
        return {
            "a": self.a,
            "q": self.q,
            "class": self.arc_class.value,
            "center": self.center,
            "halfwidth": self.halfwidth,
        }


def farey_sequence(order: int) -> list[tuple[int, int]]:
    """
    Reduced fractions a/q in [0, 1) with q <= order, ascending, as (a, q) pairs.

    Generated by the next-term recurrence, so ordering is exact.
    """
    if order < 1:
        raise OutOfRangeError("order", order, "order >= 1")
    a, b, c, d = 0, 1, 1, order
    terms = [(a, b)]
    while c < d:
        k = (order + b) // d
        a, b, c, d = c, d, k * c - a, k * d - b
        terms.append((a, b))
    return terms


def dissect_arcs(params: ArcParams) -> list[ArcLabel]:
    """
    Enumerate all major arcs and verify that no two of them meet.

    Returns:
        MAJOR ArcLabels in ascending order of centre

    Raises:
        OutOfRangeError: If r^2 < 1
        ArcOverlapError: Naming the first pair of neighbouring centres whose arcs overlap
    """
    if params.q_major_bound < 1:
        raise OutOfRangeError("r^2", params.q_major_bound, "r^2 >= 1")
    q_max = params.q_max
    if q_max < 1:
        return []

    centres = farey_sequence(q_max)
    width = 2.0 * params.halfwidth
    # neighbours a/q < a'/q' sit 1/(q q') apart, the last wraps round to 1/1
    for (a, q), (a2, q2) in zip(centres, centres[1:] + [(1, 1)]):
        if params.tau < 2 * q * q2:
            raise ArcOverlapError((a, q), (a2 % q2, q2), 1.0 / (q * q2), width)

    arcs = [
        ArcLabel(a=a, q=q, arc_class=ArcClass.MAJOR, center=a / q, halfwidth=params.halfwidth)
        for a, q in centres
    ]
    logger.info("arcs_dissected", N=params.N, c=params.c, q_max=q_max, arc_count=len(arcs))
    return arcs


def major_measure(params: ArcParams) -> float:
    """Total length 2/tau * sum_{q < r^2} phi(q) of the major arcs."""
    if params.q_max < 1:
        return 0.0
    return 2.0 * params.halfwidth * len(farey_sequence(params.q_max))


def minor_intervals(params: ArcParams, arcs: list[ArcLabel]) -> list[tuple[float, float]]:
    """The gaps between consecutive major arcs, as (start, end) with start < end in [0, 1]."""
    if not arcs:
        return [(0.0, 1.0)]
    h = params.halfwidth
    edges = [(arc.center - h, arc.center + h) for arc in arcs]
    gaps = [(hi, lo2) for (_, hi), (lo2, _) in zip(edges, edges[1:]) if lo2 > hi]
    # the arc around 0/1 straddles 0, so the closing gap ends at 1 - h
    if 1.0 - h > edges[-1][1]:
        gaps.append((edges[-1][1], 1.0 - h))
    return gaps


def _circular_offset(alpha: float, a: int, q: int) -> float:
    """Signed distance alpha - a/q taken on the circle, in [-1/2, 1/2)."""
    return (alpha - a / q + 0.5) % 1.0 - 0.5


def classify_alpha(params: ArcParams, alpha: float) -> ArcLabel:
    """
    Label alpha by the arc it lies on.

    MAJOR when alpha is within 1/tau of some a/q with q < r^2. Otherwise MINOR, labelled
    with the closest fraction of denominator at most tau, whose half-width is 1/(q tau).
    """
    if not math.isfinite(alpha):
        raise OutOfRangeError("alpha", alpha, "finite")
    alpha = alpha % 1.0
    x = Fraction(alpha)

    if params.q_max >= 1:
        near = x.limit_denominator(params.q_max)
        a, q = near.numerator % near.denominator, near.denominator
        if abs(_circular_offset(alpha, a, q)) <= params.halfwidth:
            return ArcLabel(a, q, ArcClass.MAJOR, a / q, params.halfwidth)

    best = x.limit_denominator(max(1, math.floor(params.tau)))
    a, q = best.numerator % best.denominator, best.denominator
    return ArcLabel(a, q, ArcClass.MINOR, a / q, 1.0 / (q * params.tau))


def bound_Z(params: ArcParams, z: float) -> float:
    """Envelope of |J(z)|: N/r for |z| <= 1/N, else 1/(|z| r)."""
    if abs(z) <= 1.0 / params.N:
        return params.N / params.r
    return 1.0 / (abs(z) * params.r)


def minor_bound(params: ArcParams, q: int, delta: float, eps: float) -> float:
    """
    Minor-arc envelope N r^(-1+eps) q^(-1/2), times delta^(1/2) once delta > 1.

    ``delta`` is |z| N for alpha = a/q + z.
    """
    if q < 1:
        raise OutOfRangeError("q", q, "q >= 1")
    if delta < 0:
        raise OutOfRangeError("delta", delta, "delta >= 0")
    value = params.N * params.r ** (-1.0 + eps) / math.sqrt(q)
    if delta > 1:
        value *= math.sqrt(delta)
    return value
