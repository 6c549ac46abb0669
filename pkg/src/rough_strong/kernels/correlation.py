"""
correlation.py
--------------
Cross-covariances between the fractional driver and its underlying Brownian
motion V under the Mandelbrot-van Ness construction.

    gamma(t, s) = E[B_t V_s]
                = G(H) / (H + 1/2) * (t^{H+1/2} - (t - min(t, s))^{H+1/2})   for t, s >= 0
    G(H)^2      = 2H Gamma(3/2 - H) / (Gamma(H + 1/2) Gamma(2 - 2H))

and from it the covariance of the centred log-volatility with a V increment.
"""

import numpy as np
from scipy.special import gamma

from rough_strong.core import constants as C
from rough_strong.core.config import ModelParams
from rough_strong.kernels.quadrature import integrate_adaptive


def mvn_scale(hurst: float) -> float:
    """G(H) of the Mandelbrot-van Ness kernel."""
    return float(
        np.sqrt(2.0 * hurst * gamma(1.5 - hurst) / (gamma(hurst + 0.5) * gamma(2.0 - 2.0 * hurst)))
    )


def gamma_mvn(hurst: float, t, s: float):
    """E[B_t V_s]; zero for t <= 0, constant in s once s >= t."""
    if s < 0:
        raise ValueError(f"gamma_mvn needs s >= 0 (got {s})")
    p = hurst + 0.5
    tp = np.maximum(np.asarray(t, dtype=float), 0.0)
    values = mvn_scale(hurst) / p * (tp**p - (tp - np.minimum(tp, s)) ** p)
    return float(values) if np.ndim(t) == 0 else values


def cross_cov_yc_dv(params: ModelParams, t: float, s1: float, s2: float) -> float:
    """
    E[Y^c_t (V_s2 - V_s1)] for the centred stationary log-volatility

        theta * ( (gamma(t,s2) - gamma(t,s1))
                  - lam int_0^t e^{lam (u-t)} (gamma(u,s2) - gamma(u,s1)) du ).

    Below s1 both gamma terms equal gamma(u, u), so the integral starts at s1;
    the integrand has kinked derivatives at s1 and s2, which become panel
    breakpoints. Returns exactly 0 when t <= s1.
    """
    if not 0.0 <= s1 < s2:
        raise ValueError(f"cross_cov_yc_dv needs 0 <= s1 < s2 (got s1={s1}, s2={s2})")
    if t <= s1:
        return 0.0

    h, lam = params.hurst, params.lam

    def increment(u):
        return gamma_mvn(h, u, s2) - gamma_mvn(h, u, s1)

    def integrand(u: np.ndarray) -> np.ndarray:
        return np.exp(lam * (u - t)) * increment(u)

    integral = integrate_adaptive(integrand, s1, t, breakpoints=(s2,), rtol=C.CROSS_COV_RTOL)
    return float(params.theta * (increment(t) - lam * integral))
