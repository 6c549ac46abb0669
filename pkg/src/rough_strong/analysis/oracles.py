"""
oracles.py
----------
Exact mean-square errors of the martingale parts of both schemes, reduced by
the Ito isometry and stationarity to one-dimensional lag integrals of

    D(u) = c0 - R_Z(u) = (1/2) E|Z_u - Z_0|^2,     Z = exp(Y - mu).

With step d = T/n and I = int_0^d D(u) du:

    Euler      (dV and dW parts)       n e^{2mu} 2 I
    Trapezoid  (dV Euler, dW trapezoid) n e^{2mu} (2 I - (1-rho^2) (d/2) D(d))
    Conditional dW part given W on the grid
                                       n e^{2mu} (1-rho^2) (2/d) int_0^d (d-u) D(u) du

The last one is the error of E[int e^Y dW | V, Y, W_{t_k}], i.e. the
Brownian-bridge interpolation of W; n^{2H} times it tends to the lower-bound
constant.

A custom covariance function can be injected in place of R_Z (one argument,
array in and out); D is then r(0) - r(u).
"""

import math
from typing import Callable, Optional

import numpy as np

from rough_strong.core import constants as C
from rough_strong.core.config import ModelParams
from rough_strong.kernels import r_z_deficit
from rough_strong.kernels.quadrature import integrate_adaptive

Kernel = Callable[[np.ndarray], np.ndarray]


def _deficit(params: ModelParams, kernel: Optional[Kernel]) -> Kernel:
    if kernel is None:
        return lambda u: np.asarray(r_z_deficit(params, 1.0, u))
    at_zero = float(np.asarray(kernel(np.zeros(1)))[0])
    return lambda u: at_zero - np.asarray(kernel(u), dtype=float)


def _step(params: ModelParams, n: int) -> float:
    if n < 1:
        raise ValueError(f"Oracle needs n >= 1 (got {n})")
    return params.t_final / n


def _integral(deficit: Kernel, d: float) -> float:
    return integrate_adaptive(deficit, 0.0, d, rtol=C.ORACLE_RTOL)


def oracle_mse_euler_martingale(params: ModelParams, n: int, kernel: Optional[Kernel] = None) -> float:
    d = _step(params, n)
    deficit = _deficit(params, kernel)
    return n * math.exp(2.0 * params.mu) * 2.0 * _integral(deficit, d)


def oracle_mse_trapezoid_martingale(
    params: ModelParams, n: int, kernel: Optional[Kernel] = None
) -> float:
    d = _step(params, n)
    deficit = _deficit(params, kernel)
    at_step = float(deficit(np.array([d]))[0])
    per_step = 2.0 * _integral(deficit, d) - (1.0 - params.rho**2) * 0.5 * d * at_step
    return n * math.exp(2.0 * params.mu) * per_step


def oracle_mse_conditional_w(params: ModelParams, n: int, kernel: Optional[Kernel] = None) -> float:
    d = _step(params, n)
    deficit = _deficit(params, kernel)
    weighted = integrate_adaptive(lambda u: (d - u) * deficit(u), 0.0, d, rtol=C.ORACLE_RTOL)
    return n * math.exp(2.0 * params.mu) * (1.0 - params.rho**2) * 2.0 / d * weighted
