"""The continuous model of the circle method: I(z), J(z), R and the smooth main term."""

import math
from dataclasses import dataclass

import numpy as np

from src.config import get_settings
from src.core.exceptions import OutOfRangeError
from src.core.quadrature import adaptive_panels, integrate, panel_nodes, uniform_nodes
from src.primes.counting import log_integral
from src.utils.logging import get_logger

logger = get_logger(__name__)

# complex entries per block of the z-by-x phase matrix
_BLOCK_ELEMENTS = 1 << 22


def _check_tol(tol: float) -> None:
    if tol <= 0:
        raise OutOfRangeError("tol", tol, "tol > 0")


def integral_I(N: int, z: float) -> complex:
    """
    Integral of exp(2 pi i z x) / r over [2, N] with r = ln N, in closed form.

    The difference of exponentials is written as a product with sin, which stays
    accurate as z approaches 0.
    """
    if N < 3:
        raise OutOfRangeError("N", N, "N >= 3")
    r = math.log(N)
    if z == 0:
        return complex((N - 2) / r)
    half = math.pi * z
    return complex(np.exp(1j * half * (N + 2)) * math.sin(half * (N - 2)) / (half * r))


def integral_J(N: int, z: float, tol: float | None = None) -> complex:
    """
    Integral of exp(2 pi i z x) / ln x over [2, N].

    Panels are at most 1/(8|z|) wide, eight per period of the oscillation, and refined
    adaptively to absolute error ``tol``. J(0) is the logarithmic integral.
    """
    if N < 3:
        raise OutOfRangeError("N", N, "N >= 3")
    tol = tol if tol is not None else get_settings().QUADRATURE_TOL
    _check_tol(tol)
    if z == 0:
        return complex(log_integral(N, tol))
    return integrate(
        lambda x: np.exp(2j * np.pi * z * x) / np.log(x),
        2.0,
        float(N),
        tol,
        max_width=1.0 / (8.0 * abs(z)),
    )


def _transform(z: np.ndarray, x: np.ndarray, weights: np.ndarray) -> np.ndarray:
    """J at every z as sum_x weights * exp(2 pi i z x), block by block over z."""
    rows = max(1, _BLOCK_ELEMENTS // max(1, x.size))
    out = np.empty(z.size, dtype=np.complex128)
    for start in range(0, z.size, rows):
        block = z[start : start + rows]
        out[start : start + rows] = np.exp(2j * np.pi * np.outer(block, x)) @ weights
    return out


def integral_R(N: int, c: float, tol: float | None = None) -> complex:
    """
    Integral of J(z)^2 exp(-2 pi i z N) over |z| <= 1/tau, tau = N r^-c.

    J is evaluated on one composite Gauss-Legendre x-grid sized for the fastest
    oscillation in the window. The z-grid has panels of width 1/(2N), half a period of
    the |J|^2 ripple, and is mirrored about 0, so the imaginary part of the result only
    collects rounding and is a quality diagnostic.

    Raises:
        OutOfRangeError: If N < 100, c < 2, tol <= 0 or tau <= 1
    """
    if N < 100:
        raise OutOfRangeError("N", N, "N >= 100")
    if c < 2:
        raise OutOfRangeError("c", c, "c >= 2")
    settings = get_settings()
    tol = tol if tol is not None else settings.QUADRATURE_TOL
    _check_tol(tol)
    r = math.log(N)
    tau = N * r**-c
    if tau <= 1:
        raise OutOfRangeError("tau", tau, f"tau > 1 (N={N}, c={c})")
    z_max = 1.0 / tau
    order = settings.QUADRATURE_ORDER

    panels = adaptive_panels(
        lambda x: 1.0 / np.log(x), 2.0, float(N), tol, max_width=tau / 8.0, order=order
    )
    x, wx = panel_nodes(panels, order)
    weights = (wx / np.log(x)).astype(np.complex128)

    z_pos, wz_pos = uniform_nodes(0.0, z_max, 1.0 / (2.0 * N), order)
    j_pos = _transform(z_pos, x, weights)

    z = np.concatenate([-z_pos[::-1], z_pos])
    wz = np.concatenate([wz_pos[::-1], wz_pos])
    j = np.concatenate([np.conj(j_pos[::-1]), j_pos])
    integrand = j * j * np.exp(-2j * np.pi * ((z * N) % 1.0))
    value = complex(np.sum(wz * integrand))

    logger.info(
        "integral_r_evaluated",
        N=N,
        c=c,
        tau=tau,
        x_nodes=int(x.size),
        z_nodes=int(z.size),
        real=value.real,
        imag=value.imag,
    )
    return value


def main_term_integral(N: int, tol: float | None = None) -> float:
    """
    Integral of 1/(ln x ln(N - x)) over [2, N - 2].

    This is the smooth count R approximates; the integrand is symmetric about N/2.
    """
    if N < 5:
        raise OutOfRangeError("N", N, "N >= 5")
    tol = tol if tol is not None else get_settings().QUADRATURE_TOL
    _check_tol(tol)
    half = integrate(
        lambda x: 1.0 / (np.log(x) * np.log(N - x)), 2.0, N / 2.0, tol / 2.0
    )
    return 2.0 * half.real


@dataclass(frozen=True)
class LatticeCount:
    """Ordered solutions of x1 + x2 = N in integers x1, x2 > 2, exact and as printed."""

    N: int
    exact: int
    printed: float

    @property
    def ratio(self) -> float:
        return self.printed / self.exact


def lattice_representations(N: int) -> LatticeCount:
    """
    Exact count N - 5 next to the printed expression (N^2 - 5N + 6)/N.

    The two agree to leading order only; the printed form exceeds the exact count by 6/N.
    """
    if N < 6:
        raise OutOfRangeError("N", N, "N >= 6")
    return LatticeCount(N=N, exact=N - 5, printed=(N * N - 5 * N + 6) / N)
