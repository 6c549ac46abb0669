"""
fourier.py
----------
Independent evaluation of R_Y from the spectral density of the stationary
fOU process:

    R_Y(tau) = theta^2 Gamma(2H+1) sin(pi H) / pi * int_0^inf cos(tau x) x^{1-2H} / (lam^2 + x^2) dx

The range is split where the density has settled into its power-law tail
(HEAD_SCALE lam, or one period 2 pi / tau if longer): the head goes to
QUADPACK's finite oscillatory rule and the tail to its Fourier-integral
routine (scipy quad with weight="cos" on a finite and an infinite range).
Slow compared to the closed form; used to cross-check it.
"""

import warnings

import numpy as np
from scipy import integrate
from scipy.special import gamma

from rough_strong.core.config import ModelParams
from rough_strong.core.errors import QuadratureNotConverged
from rough_strong.kernels.covariance import variance_y
from rough_strong.utils.logger import get_logger

logger = get_logger(__name__)

FOURIER_EPSABS = 1e-13
FOURIER_EPSREL = 1e-11
FOURIER_LIMIT = 1000
FOURIER_LIMLST = 200
# accepted error estimate of one lag (head plus tail)
FOURIER_MAX_ERROR = 1e-8
# the finite head covers this many multiples of lam, and at least one period
HEAD_SCALE = 50.0


def _spectral_integral(params: ModelParams, tau: float) -> float:
    exponent = 1.0 - 2.0 * params.hurst
    lam2 = params.lam**2

    def density(x: float) -> float:
        return x**exponent / (lam2 + x * x)

    split = max(HEAD_SCALE * params.lam, 2.0 * np.pi / tau)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        head, head_error = integrate.quad(
            density,
            0.0,
            split,
            weight="cos",
            wvar=tau,
            epsabs=FOURIER_EPSABS,
            epsrel=FOURIER_EPSREL,
            limit=FOURIER_LIMIT,
        )
        tail, tail_error = integrate.quad(
            density,
            split,
            np.inf,
            weight="cos",
            wvar=tau,
            epsabs=FOURIER_EPSABS,
            limlst=FOURIER_LIMLST,
            limit=FOURIER_LIMIT,
        )

    value, error = head + tail, head_error + tail_error
    if not np.isfinite(value) or error > FOURIER_MAX_ERROR:
        logger.error(f"[FOURIER] tau={tau} | estimate={value:.6e} | error={error:.3e}")
        raise QuadratureNotConverged(
            f"Fourier integral at tau={tau} did not converge (error estimate {error:.3e})",
            estimate=float(value),
            error=float(error),
        )
    return float(value)


def r_y_fourier(params: ModelParams, tau):
    """R_Y(tau) from the spectral representation; scalar or array of lags."""
    lags = np.asarray(tau, dtype=float)
    if np.any(lags < 0):
        raise ValueError("Lag tau must be >= 0")

    prefactor = params.theta**2 * gamma(2.0 * params.hurst + 1.0) * np.sin(np.pi * params.hurst) / np.pi
    values = np.array(
        [
            variance_y(params) if lag == 0.0 else prefactor * _spectral_integral(params, float(lag))
            for lag in lags.ravel()
        ]
    ).reshape(lags.shape)
    return float(values) if np.ndim(tau) == 0 else values
