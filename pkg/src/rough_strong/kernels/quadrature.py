"""
quadrature.py
-------------
Composite Gauss-Legendre quadrature (16-point panels).

Two drivers:
  - integrate_halving: global panel halving on a fixed interval, vectorised over
    a batch of integrands (one row per integrand). Used for smooth integrands
    such as the substituted covariance integral.
  - integrate_adaptive: local bisection of the panels whose 16-point and
    2x16-point estimates disagree. Handles algebraic endpoint singularities and
    kinks at user supplied breakpoints.

Integrands are evaluated on whole node arrays at once: f(x) must accept a 1-D
array of abscissae and return values of shape (..., len(x)).
"""

from typing import Callable, Iterable, Sequence

import numpy as np
from numpy.polynomial.legendre import leggauss

from rough_strong.core import constants as C
from rough_strong.core.errors import QuadratureNotConverged
from rough_strong.utils.logger import get_logger

logger = get_logger(__name__)

Integrand = Callable[[np.ndarray], np.ndarray]

_NODES, _WEIGHTS = leggauss(C.GL_ORDER)


# -------------------------------------------------------
# PANEL RULES
# -------------------------------------------------------


def _panel_nodes(lo: np.ndarray, hi: np.ndarray):
    """Nodes and weights of the 16-point rule on each [lo_i, hi_i], flattened."""
    half = 0.5 * (hi - lo)
    mid = 0.5 * (hi + lo)
    x = mid[:, None] + half[:, None] * _NODES[None, :]
    w = half[:, None] * _WEIGHTS[None, :]
    return x.ravel(), w


def gauss_legendre(f: Integrand, a: float, b: float, panels: int = 1) -> np.ndarray:
    """Composite rule with `panels` equal panels on [a, b]."""
    edges = np.linspace(a, b, panels + 1)
    x, w = _panel_nodes(edges[:-1], edges[1:])
    return np.asarray(f(x)) @ w.ravel()


# -------------------------------------------------------
# GLOBAL HALVING (batched)
# -------------------------------------------------------


def integrate_halving(
    f: Integrand,
    a: float,
    b: float,
    rtol: float = C.KERNEL_RTOL,
    atol: float = C.QUAD_ATOL,
    max_halvings: int = C.MAX_HALVINGS,
) -> np.ndarray:
    """
    Halve all panels until two successive composite estimates agree to
    max(atol, rtol * |estimate|) for every row of the batch.
    """
    previous = gauss_legendre(f, a, b, 1)
    panels = 1
    for _ in range(max_halvings):
        panels *= 2
        current = gauss_legendre(f, a, b, panels)
        change = np.abs(current - previous)
        if np.all(change <= np.maximum(atol, rtol * np.abs(current))):
            return current
        previous = current

    worst = float(np.max(change))
    logger.error(f"[QUAD] Halving stalled on [{a}, {b}] after {panels} panels | change={worst:.3e}")
    raise QuadratureNotConverged(
        f"Panel halving did not converge on [{a}, {b}] within {panels} panels "
        f"(last change {worst:.3e})",
        error=worst,
    )


# -------------------------------------------------------
# LOCAL ADAPTIVE BISECTION (scalar integral)
# -------------------------------------------------------


def _initial_edges(a: float, b: float, breakpoints: Iterable[float]) -> np.ndarray:
    inner = sorted({float(p) for p in breakpoints if a < p < b})
    return np.array([a, *inner, b], dtype=float)


def integrate_adaptive(
    f: Integrand,
    a: float,
    b: float,
    breakpoints: Sequence[float] = (),
    rtol: float = C.ORACLE_RTOL,
    atol: float = C.QUAD_ATOL,
    max_panels: int = C.MAX_PANELS,
) -> float:
    """
    Integrate a scalar function over [a, b].

    Every pending panel is compared against its bisection. The sweep stops
    once the summed differences fall within tolerance; otherwise panels whose
    difference exceeds their share of the tolerance are split. All pending
    panels of one sweep are evaluated in a single call to f.
    """
    if b < a:
        raise ValueError(f"Integration bounds reversed: [{a}, {b}]")
    if b == a:
        return 0.0

    edges = _initial_edges(a, b, breakpoints)
    lo, hi = edges[:-1], edges[1:]
    x, w = _panel_nodes(lo, hi)
    coarse = (np.asarray(f(x)).reshape(w.shape) * w).sum(axis=1)

    accepted = 0.0
    accepted_error = 0.0
    width = b - a
    seen = len(lo)

    while lo.size:
        mid = 0.5 * (lo + hi)
        x, w = _panel_nodes(np.concatenate([lo, mid]), np.concatenate([mid, hi]))
        halves = (np.asarray(f(x)).reshape(w.shape) * w).sum(axis=1)
        left, right = halves[: lo.size], halves[lo.size :]
        fine = left + right
        error = np.abs(fine - coarse)

        estimate = accepted + fine.sum()
        tol = max(atol, rtol * abs(estimate))
        if accepted_error + error.sum() <= tol:
            accepted += fine.sum()
            break

        ok = error <= tol * (hi - lo) / width
        # panels below resolution cannot be refined further
        ok |= (hi - lo) <= 64 * np.finfo(float).eps * np.maximum(np.abs(lo), np.abs(hi))

        accepted += fine[ok].sum()
        accepted_error += error[ok].sum()
        todo = ~ok
        lo, mid, hi = lo[todo], mid[todo], hi[todo]
        lo, hi = np.concatenate([lo, mid]), np.concatenate([mid, hi])
        coarse = np.concatenate([left[todo], right[todo]])

        seen += lo.size
        if seen > max_panels:
            logger.error(f"[QUAD] Adaptive budget exhausted on [{a}, {b}] | panels={seen}")
            raise QuadratureNotConverged(
                f"Adaptive quadrature on [{a}, {b}] exceeded {max_panels} panels",
                estimate=float(accepted),
            )

    return float(accepted)
