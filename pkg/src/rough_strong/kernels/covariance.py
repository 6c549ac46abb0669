"""
covariance.py
-------------
Stationary covariance of the log-volatility Y (a fractional Ornstein-Uhlenbeck
process with H < 1/2) and of the exponential processes Z^(a) = exp(a (Y - mu)).

R_Y is evaluated through the exponential split of the cosh kernel

    R_Y(tau) / theta^2 = (A/2) e^{-lam tau} + (A e^{lam tau} Q(2H, lam tau) - J(tau)) / 2,
    A    = Gamma(2H+1) / (2 lam^{2H}),
    J(t) = H int_0^t e^{-lam (t-u)} u^{2H-1} du
         = (t^{2H}/2) int_0^1 exp(-lam t (1 - x^{1/(2H)})) dx,

with Q the regularised upper incomplete gamma function. Both halves stay O(1)
for moderate lags, unlike the two e^{lam tau}-sized terms of the cosh form. The
substituted J integrand is smooth and is integrated by panel halving.

Once lam tau >= LARGE_LAG the two halves are merged into one Laplace-type
integral (w = lam |tau - u|, q = w / (lam tau), p = 2H - 1)

    R_Y(tau) / theta^2 = (A/2) e^{-lam tau}
                       + (H tau^p / (2 lam)) int_0^W e^{-w} (1-q)^p expm1(2p atanh q) dw,

whose integrand carries no cancellation; the neglected pieces are O(e^{-W}).

All lag arguments accept scalars or arrays; scalar in, float out.
"""

from dataclasses import dataclass
from typing import Dict, List

import numpy as np
from pydantic import BaseModel, ConfigDict
from scipy.special import gamma, gammainc, gammaincc

from rough_strong.core import constants as C
from rough_strong.core.config import ModelParams
from rough_strong.kernels.quadrature import integrate_halving

# lam * tau from which R_Y is evaluated by the merged Laplace-type integral
LARGE_LAG = 100.0
# upper limit W of that integral (W <= LARGE_LAG / 2 keeps q <= 1/2)
_TAIL_CUTOFF = 50.0
_TAU_CHUNK = 256


# -------------------------------------------------------
# VALUE TYPES
# -------------------------------------------------------


@dataclass(frozen=True)
class KernelValue:
    lag: float
    value: float


class AsymptoticConstants(BaseModel):
    """Small-lag constants of R_Z(tau) = c0 - c1 tau^{2H} + o(tau^{2H})."""

    model_config = ConfigDict(frozen=True)

    a: float
    c0: float
    c1: float
    variance_y: float


# -------------------------------------------------------
# HELPERS
# -------------------------------------------------------


def _lags(tau) -> np.ndarray:
    arr = np.asarray(tau, dtype=float)
    if np.any(arr < 0):
        raise ValueError("Lag tau must be >= 0")
    if np.any(arr * 0 != 0):
        raise ValueError("Lag tau must be finite")
    return arr


def _shape_like(tau, values: np.ndarray):
    return float(values) if np.ndim(tau) == 0 else values


def _stationary_scale(params: ModelParams) -> float:
    return gamma(2.0 * params.hurst + 1.0) / (2.0 * params.lam ** (2.0 * params.hurst))


def _j_integral(params: ModelParams, taus: np.ndarray) -> np.ndarray:
    """J(tau) for a flat array of lags (zero lags give zero)."""
    out = np.zeros_like(taus)
    positive = np.flatnonzero(taus > 0)
    power = 1.0 / (2.0 * params.hurst)

    for start in range(0, positive.size, _TAU_CHUNK):
        idx = positive[start : start + _TAU_CHUNK]
        scaled = params.lam * taus[idx]

        def integrand(x: np.ndarray) -> np.ndarray:
            return np.exp(-scaled[:, None] * (1.0 - x[None, :] ** power))

        out[idx] = 0.5 * taus[idx] ** (2.0 * params.hurst) * integrate_halving(
            integrand, 0.0, 1.0, rtol=C.KERNEL_RTOL
        )
    return out


# -------------------------------------------------------
# R_Y
# -------------------------------------------------------


def variance_y(params: ModelParams) -> float:
    """R_Y(0) = theta^2 Gamma(2H+1) / (2 lam^{2H})."""
    return params.theta**2 * _stationary_scale(params)


def _split_deficit(params: ModelParams, taus: np.ndarray) -> np.ndarray:
    """R_Y(0) - R_Y(tau) through the incomplete-gamma split; lam * tau < LARGE_LAG."""
    x = params.lam * taus
    s = 2.0 * params.hurst
    scale = _stationary_scale(params)
    bracket = scale * (gammainc(s, x) - np.expm1(-x) - np.expm1(x) * gammaincc(s, x))
    return 0.5 * params.theta**2 * (bracket + _j_integral(params, taus))


def _large_lag_covariance(params: ModelParams, taus: np.ndarray) -> np.ndarray:
    """R_Y(tau) for lam * tau >= LARGE_LAG from the merged Laplace-type integral."""
    out = np.empty_like(taus)
    p = 2.0 * params.hurst - 1.0

    for start in range(0, taus.size, _TAU_CHUNK):
        chunk = taus[start : start + _TAU_CHUNK]
        scaled = params.lam * chunk

        def integrand(w: np.ndarray) -> np.ndarray:
            q = w[None, :] / scaled[:, None]
            return np.exp(-w)[None, :] * (1.0 - q) ** p * np.expm1(2.0 * p * np.arctanh(q))

        tail = integrate_halving(integrand, 0.0, _TAIL_CUTOFF, rtol=C.KERNEL_RTOL)
        out[start : start + _TAU_CHUNK] = params.theta**2 * (
            0.5 * _stationary_scale(params) * np.exp(-scaled)
            + 0.5 * params.hurst * chunk**p / params.lam * tail
        )
    return out


def r_y_deficit(params: ModelParams, tau):
    """R_Y(0) - R_Y(tau), free of cancellation for small lags."""
    taus = _lags(tau)
    flat = taus.ravel()
    large = params.lam * flat >= LARGE_LAG

    deficit = np.empty_like(flat)
    deficit[~large] = _split_deficit(params, flat[~large])
    deficit[large] = variance_y(params) - _large_lag_covariance(params, flat[large])
    return _shape_like(tau, deficit.reshape(taus.shape))


def r_y(params: ModelParams, tau):
    """Stationary autocovariance of Y at lag tau; r_y(0) == variance_y exactly."""
    taus = _lags(tau)
    flat = taus.ravel()
    large = params.lam * flat >= LARGE_LAG
    var = variance_y(params)

    values = np.empty_like(flat)
    values[~large] = var - _split_deficit(params, flat[~large])
    values[large] = _large_lag_covariance(params, flat[large])
    values[flat == 0.0] = var
    return _shape_like(tau, values.reshape(taus.shape))


def r_y_small_lag_check(params: ModelParams, tau: float) -> float:
    """(R_Y(0) - R_Y(tau)) / tau^{2H}; tends to theta^2 / 2 as tau -> 0."""
    if not 0.0 < tau <= 1.0:
        raise ValueError(f"Small-lag check needs 0 < tau <= 1 (got {tau})")
    return float(r_y_deficit(params, tau)) / tau ** (2.0 * params.hurst)


def r_y_large_lag_asymptote(params: ModelParams, tau):
    """Leading power-law term theta^2 H (2H-1) lam^{-2} tau^{2H-2} of R_Y at large lags."""
    h = params.hurst
    return params.theta**2 * h * (2.0 * h - 1.0) / params.lam**2 * np.asarray(tau) ** (2.0 * h - 2.0)


# -------------------------------------------------------
# Z^(a) = exp(a (Y - mu))
# -------------------------------------------------------


def mean_z(params: ModelParams, a: float) -> float:
    return float(np.exp(0.5 * a * a * variance_y(params)))


def r_z(params: ModelParams, a: float, tau):
    """exp(a^2 R_Y(0)) (exp(a^2 R_Y(tau)) - 1)."""
    _check_a(a)
    a2 = a * a
    return _shape_like(tau, np.exp(a2 * variance_y(params)) * np.expm1(a2 * np.asarray(r_y(params, tau))))


def r_z_deficit(params: ModelParams, a: float, tau):
    """c0 - R_Z(tau) = e^{a^2 V} e^{a^2 R_Y(tau)} expm1(a^2 (V - R_Y(tau)))."""
    _check_a(a)
    a2 = a * a
    var = variance_y(params)
    deficit = np.asarray(r_y_deficit(params, tau))
    values = np.exp(a2 * var) * np.exp(a2 * (var - deficit)) * np.expm1(a2 * deficit)
    return _shape_like(tau, values)


def z_increment_msq(params: ModelParams, a: float, tau):
    """E|Z_t - Z_s|^2 for |t - s| = tau; ~ 2 c1 tau^{2H} at small lags."""
    return _shape_like(tau, 2.0 * np.asarray(r_z_deficit(params, a, tau)))


def z_midpoint_msq(params: ModelParams, a: float, u, delta: float):
    """E|Z_u - (Z_0 + Z_delta)/2|^2 for 0 <= u <= delta."""
    us = np.asarray(u, dtype=float)
    if np.any(us < 0) or np.any(us > delta):
        raise ValueError("Midpoint offset u must lie in [0, delta]")
    values = (
        np.asarray(r_z_deficit(params, a, us))
        + np.asarray(r_z_deficit(params, a, delta - us))
        - 0.5 * float(r_z_deficit(params, a, delta))
    )
    return _shape_like(u, values)


def asymptotic_constants(params: ModelParams, a: float) -> AsymptoticConstants:
    _check_a(a)
    var = variance_y(params)
    a2 = a * a
    return AsymptoticConstants(
        a=a,
        c0=float(np.exp(a2 * var) * np.expm1(a2 * var)),
        c1=float(0.5 * a2 * params.theta**2 * np.exp(2.0 * a2 * var)),
        variance_y=var,
    )


def kernel_table(params: ModelParams, a: float, taus) -> Dict[str, List[KernelValue]]:
    _check_a(a)
    lags = _lags(taus).ravel()
    ry = np.asarray(r_y(params, lags))
    rz = np.exp(a * a * variance_y(params)) * np.expm1(a * a * ry)
    return {
        "r_y": [KernelValue(float(t), float(v)) for t, v in zip(lags, ry)],
        "r_z": [KernelValue(float(t), float(v)) for t, v in zip(lags, rz)],
    }


def _check_a(a: float) -> None:
    if a == 0:
        raise ValueError("Exponent a of Z^(a) must be nonzero")
