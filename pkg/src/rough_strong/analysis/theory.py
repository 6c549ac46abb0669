"""
theory.py
---------
Asymptotic constants of the strong error,

    n^{2H} E|X_T - X_n^E|^2  -> C_E  = 2 e^{2mu} c1 T^{2H+1} / (2H+1)
    n^{2H} E|X_T - X_n^Tr|^2 -> C_Tr = C_E - (1-rho^2) e^{2mu} c1 T^{2H+1} / 2

and the constant of the lower bound for any method using the same grid
information, (1-rho^2) 2 / ((2H+1)(2H+2)) T^{2H+1} e^{2mu} c1, with
c1 = c1(a=1) from the small-lag expansion of R_Z.
"""

import math

from pydantic import BaseModel, ConfigDict

from rough_strong.core.config import ModelParams
from rough_strong.kernels import asymptotic_constants, variance_y


class TheoryConstants(BaseModel):
    model_config = ConfigDict(frozen=True)

    c_euler: float
    c_trapezoid: float
    lower_bound: float
    hurst: float


def theory_constants(params: ModelParams) -> TheoryConstants:
    h, t = params.hurst, params.t_final
    c1 = asymptotic_constants(params, 1.0).c1
    scale = math.exp(2.0 * params.mu) * c1 * t ** (2.0 * h + 1.0)
    w_share = 1.0 - params.rho**2

    c_euler = 2.0 * scale / (2.0 * h + 1.0)
    return TheoryConstants(
        c_euler=c_euler,
        c_trapezoid=c_euler - 0.5 * w_share * scale,
        lower_bound=w_share * 2.0 / ((2.0 * h + 1.0) * (2.0 * h + 2.0)) * scale,
        hurst=h,
    )


def expected_log_price(params: ModelParams) -> float:
    """E X_T = -(T/2) e^{2mu} exp(2 R_Y(0)); the stochastic integrals have mean zero."""
    return -0.5 * params.t_final * math.exp(2.0 * params.mu + 2.0 * variance_y(params))
