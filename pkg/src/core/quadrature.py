"""Adaptive composite Gauss-Legendre quadrature.

Panels are refined by bisection until the difference between a panel's single-rule
value and the sum over its two halves is below the panel's share of the tolerance.
Accepted panels are kept in ascending order and reduced with numpy's pairwise sum, so a
given panel set always produces the same bits.
"""

import math
from collections import deque
from collections.abc import Callable
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from numpy.polynomial.legendre import leggauss

from src.core.exceptions import OutOfRangeError, QuadratureError
from src.utils.metrics import quadrature_panels_total

Integrand = Callable[[np.ndarray], np.ndarray]

DEFAULT_ORDER = 16
MAX_PANELS = 1 << 21


@dataclass(frozen=True)
class Panel:
    """An accepted quadrature panel and its contribution."""

    a: float
    b: float
    value: complex


@lru_cache(maxsize=8)
def gauss_legendre_rule(order: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights of the ``order``-point rule on [-1, 1]."""
    nodes, weights = leggauss(order)
    nodes.flags.writeable = False
    weights.flags.writeable = False
    return nodes, weights


def gauss_legendre(f: Integrand, a: float, b: float, order: int = DEFAULT_ORDER) -> complex:
    """Apply a single Gauss-Legendre rule on [a, b]."""
    nodes, weights = gauss_legendre_rule(order)
    half = 0.5 * (b - a)
    x = half * nodes + 0.5 * (a + b)
    return complex(half * np.sum(weights * f(x)))


def adaptive_panels(
    f: Integrand,
    a: float,
    b: float,
    tol: float,
    *,
    max_width: float | None = None,
    order: int = DEFAULT_ORDER,
) -> list[Panel]:
    """
    Partition [a, b] into panels on which ``f`` is integrated to ``tol``.

    Args:
        f: Vectorised integrand, real or complex valued
        a: Lower limit
        b: Upper limit, b > a
        tol: Absolute error target for the whole interval
        max_width: Upper bound on panel width (oscillation-aware sizing)
        order: Gauss-Legendre nodes per panel

    Returns:
        Accepted panels in ascending order

    Raises:
        QuadratureError: If refinement exceeds MAX_PANELS
    """
    if tol <= 0:
        raise OutOfRangeError("tol", tol, "tol > 0")
    if not b > a:
        raise OutOfRangeError("b", b, f"b > a={a}")

    length = b - a
    initial = 1 if max_width is None else max(1, math.ceil(length / max_width))
    edges = np.linspace(a, b, initial + 1)

    pending: deque[tuple[float, float, complex]] = deque()
    for left, right in zip(edges[:-1], edges[1:]):
        pending.append((float(left), float(right), gauss_legendre(f, left, right, order)))

    accepted: list[Panel] = []
    while pending:
        left, right, coarse = pending.popleft()
        mid = 0.5 * (left + right)
        lower = gauss_legendre(f, left, mid, order)
        upper = gauss_legendre(f, mid, right, order)
        if abs(coarse - (lower + upper)) <= tol * (right - left) / length or mid in (left, right):
            accepted.append(Panel(left, mid, lower))
            accepted.append(Panel(mid, right, upper))
        else:
            pending.appendleft((mid, right, upper))
            pending.appendleft((left, mid, lower))
        if len(accepted) + len(pending) > MAX_PANELS:
            raise QuadratureError(a, b, tol, MAX_PANELS)

    quadrature_panels_total.inc(len(accepted))
    return accepted


def sum_panels(panels: list[Panel]) -> complex:
    """Fixed-order pairwise reduction of panel contributions."""
    return complex(np.sum(np.array([panel.value for panel in panels], dtype=np.complex128)))


def integrate(
    f: Integrand,
    a: float,
    b: float,
    tol: float,
    *,
    max_width: float | None = None,
    order: int = DEFAULT_ORDER,
) -> complex:
    """Integrate ``f`` over [a, b] to absolute error ``tol``."""
    return sum_panels(adaptive_panels(f, a, b, tol, max_width=max_width, order=order))


def panel_nodes(panels: list[Panel], order: int = DEFAULT_ORDER) -> tuple[np.ndarray, np.ndarray]:
    """Flatten a panel set into composite nodes and weights."""
    nodes, weights = gauss_legendre_rule(order)
    lefts = np.array([panel.a for panel in panels])
    rights = np.array([panel.b for panel in panels])
    half = 0.5 * (rights - lefts)
    centre = 0.5 * (rights + lefts)
    x = (half[:, None] * nodes[None, :] + centre[:, None]).ravel()
    w = (half[:, None] * weights[None, :]).ravel()
    return x, w


def uniform_nodes(
    a: float, b: float, max_width: float, order: int = DEFAULT_ORDER
) -> tuple[np.ndarray, np.ndarray]:
    """Composite nodes and weights on equal panels no wider than ``max_width``."""
    count = max(1, math.ceil((b - a) / max_width))
    edges = np.linspace(a, b, count + 1)
    panels = [Panel(float(lo), float(hi), 0j) for lo, hi in zip(edges[:-1], edges[1:])]
    return panel_nodes(panels, order)
