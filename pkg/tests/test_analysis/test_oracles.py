import math

import numpy as np
import pytest
from scipy import integrate

from rough_strong.analysis import (
    oracle_mse_conditional_w,
    oracle_mse_euler_martingale,
    oracle_mse_trapezoid_martingale,
    theory_constants,
)
from rough_strong.core.config import ModelParams
from rough_strong.kernels import r_z, r_z_deficit

POWERS = range(8, 15)


@pytest.fixture(scope="module")
def scaled_oracles():
    """n^{2H} times each oracle along n = 2^8..2^14 at default parameters."""
    params = ModelParams()
    ns = [2**k for k in POWERS]
    scale = [n ** (2 * params.hurst) for n in ns]
    return {
        "euler": np.array([s * oracle_mse_euler_martingale(params, n) for s, n in zip(scale, ns)]),
        "trapezoid": np.array([s * oracle_mse_trapezoid_martingale(params, n) for s, n in zip(scale, ns)]),
        "conditional": np.array([s * oracle_mse_conditional_w(params, n) for s, n in zip(scale, ns)]),
        "theory": theory_constants(params),
    }


def test_euler_oracle_approaches_constant(scaled_oracles):
    deviation = np.abs(scaled_oracles["euler"] / scaled_oracles["theory"].c_euler - 1.0)
    assert np.all(np.diff(deviation) < 0)
    assert deviation[-1] <= 0.10


def test_trapezoid_oracle_approaches_constant(scaled_oracles):
    deviation = np.abs(scaled_oracles["trapezoid"] / scaled_oracles["theory"].c_trapezoid - 1.0)
    assert np.all(np.diff(deviation) < 0)
    assert deviation[-1] <= 0.10


def test_oracle_ratio(scaled_oracles):
    ratio = scaled_oracles["trapezoid"][-1] / scaled_oracles["euler"][-1]
    assert ratio == pytest.approx(0.625, abs=0.02)


def test_conditional_oracle_approaches_lower_bound(scaled_oracles):
    lower = scaled_oracles["theory"].lower_bound
    assert scaled_oracles["conditional"][-1] == pytest.approx(lower, rel=0.10)
    assert np.all(scaled_oracles["conditional"] <= scaled_oracles["trapezoid"])


def test_single_step_matches_direct_integral(default_params):
    direct, _ = integrate.quad(lambda u: r_z_deficit(default_params, 1.0, u), 0.0, 1.0, epsabs=1e-13)
    assert oracle_mse_euler_martingale(default_params, 1) == pytest.approx(2.0 * direct, rel=1e-8)


def test_injected_kernel_matches_builtin(default_params):
    kernel = lambda u: np.asarray(r_z(default_params, 1.0, u))  # noqa: E731
    builtin = oracle_mse_euler_martingale(default_params, 16)
    assert oracle_mse_euler_martingale(default_params, 16, kernel=kernel) == pytest.approx(builtin, rel=1e-9)


def test_constant_kernel_gives_zero(default_params):
    flat = lambda u: np.ones_like(np.asarray(u, dtype=float))  # noqa: E731
    assert oracle_mse_euler_martingale(default_params, 8, kernel=flat) == 0.0
    assert oracle_mse_trapezoid_martingale(default_params, 8, kernel=flat) == 0.0
    assert oracle_mse_conditional_w(default_params, 8, kernel=flat) == 0.0


def test_correlation_only_enters_dw_terms():
    uncorrelated, correlated = ModelParams(), ModelParams(rho=-0.7)
    assert oracle_mse_euler_martingale(correlated, 32) == oracle_mse_euler_martingale(uncorrelated, 32)
    assert oracle_mse_trapezoid_martingale(correlated, 32) > oracle_mse_trapezoid_martingale(uncorrelated, 32)
    assert oracle_mse_conditional_w(correlated, 32) == pytest.approx(
        0.51 * oracle_mse_conditional_w(uncorrelated, 32), rel=1e-12
    )


def test_mean_level_scaling():
    base = oracle_mse_euler_martingale(ModelParams(), 4)
    shifted = oracle_mse_euler_martingale(ModelParams(mu=0.25), 4)
    assert shifted == pytest.approx(math.exp(0.5) * base, rel=1e-12)


def test_rejects_empty_grid(default_params):
    with pytest.raises(ValueError):
        oracle_mse_euler_martingale(default_params, 0)
