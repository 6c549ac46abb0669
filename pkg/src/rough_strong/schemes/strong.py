"""
strong.py
---------
Euler and trapezoidal approximations of the log-price

    X_T = -1/2 int_0^T e^{2Y_s} ds + rho int_0^T e^{Y_s} dV_s + sqrt(1-rho^2) int_0^T e^{Y_s} dW_s

from grid values of Y and increments of V and W.

Euler uses left endpoints throughout. The trapezoidal scheme averages the
endpoints in the Riemann and dW sums; the dV sum stays left-endpoint since
Y and V are correlated.

Every function works on the last axis, so batched paths give one value per
row. `euler`/`trapezoid` return a SchemeResult for a single path;
`scheme_parts` is the batched form used by the Monte Carlo driver.
"""

import math
from enum import Enum
from typing import Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from rough_strong.core import constants as C
from rough_strong.core.config import ModelParams
from rough_strong.core.errors import ConfigurationError
from rough_strong.sampler.joint import JointPath


class Scheme(str, Enum):
    EULER = "euler"
    TRAPEZOID = "trapezoid"


class SchemeResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    value: float
    riemann_part: float
    dv_part: float
    dw_part: float
    scheme: Scheme
    grid_n: int


def _sum(terms: np.ndarray) -> np.ndarray:
    """Sum over the last axis; compensated (math.fsum) for long paths."""
    if terms.shape[-1] < C.FSUM_THRESHOLD:
        return np.sum(terms, axis=-1)
    rows = terms.reshape(-1, terms.shape[-1])
    sums = np.array([math.fsum(row) for row in rows])
    return sums.reshape(terms.shape[:-1]) if terms.ndim > 1 else sums[0]


def _check(path: JointPath, params: ModelParams) -> None:
    if not math.isclose(path.grid.t_final, params.t_final, rel_tol=1e-12):
        raise ConfigurationError(
            f"Path horizon {path.grid.t_final} does not match params.t_final={params.t_final}"
        )
    if path.dv is None and params.rho != 0.0:
        raise ConfigurationError("Path carries no dV increments but rho != 0")


def scheme_parts(
    path: JointPath, params: ModelParams, scheme: Scheme
) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(riemann_part, dv_part, dw_part), each of the path's batch shape."""
    _check(path, params)
    step = path.grid.step
    ey = np.exp(path.y)
    e2y = ey * ey
    left = ey[..., :-1]
    w_coef = math.sqrt(1.0 - params.rho**2)

    if path.dv is None or params.rho == 0.0:
        dv_part = np.zeros(path.batch_shape)
    else:
        dv_part = params.rho * _sum(left * path.dv)

    if Scheme(scheme) is Scheme.EULER:
        riemann = -0.5 * step * _sum(e2y[..., :-1])
        dw_part = w_coef * _sum(left * path.dw)
    else:
        riemann = -0.25 * step * _sum(e2y[..., :-1] + e2y[..., 1:])
        dw_part = (0.5 * w_coef) * _sum((left + ey[..., 1:]) * path.dw)

    return np.asarray(riemann), np.asarray(dv_part), np.asarray(dw_part)


def scheme_values(path: JointPath, params: ModelParams, scheme: Scheme) -> np.ndarray:
    riemann, dv_part, dw_part = scheme_parts(path, params, scheme)
    return riemann + dv_part + dw_part


def _result(path: JointPath, params: ModelParams, scheme: Scheme) -> SchemeResult:
    if path.batch_shape:
        raise ValueError("SchemeResult is defined for a single path; use scheme_parts for batches")
    riemann, dv_part, dw_part = (float(p) for p in scheme_parts(path, params, scheme))
    return SchemeResult(
        value=riemann + dv_part + dw_part,
        riemann_part=riemann,
        dv_part=dv_part,
        dw_part=dw_part,
        scheme=scheme,
        grid_n=path.grid.n,
    )


def euler(path: JointPath, params: ModelParams) -> SchemeResult:
    return _result(path, params, Scheme.EULER)


def trapezoid(path: JointPath, params: ModelParams) -> SchemeResult:
    return _result(path, params, Scheme.TRAPEZOID)


def price_from_logprice(x, params: ModelParams):
    """S = s0 * exp(x)."""
    return params.s0 * np.exp(x)
