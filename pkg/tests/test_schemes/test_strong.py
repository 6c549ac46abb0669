import math

import numpy as np
import pytest

from rough_strong.core.config import ModelParams
from rough_strong.core.errors import ConfigurationError
from rough_strong.schemes import Scheme, euler, price_from_logprice, scheme_parts, scheme_values, trapezoid


def test_euler_single_step(hand_path):
    params = ModelParams(rho=0.6)
    y0, y1, v, w = 0.2, -0.1, 0.3, -0.4
    result = euler(hand_path([y0, y1], [v], [w]), params)

    assert result.riemann_part == pytest.approx(-0.5 * math.exp(2 * y0), rel=1e-14)
    assert result.dv_part == pytest.approx(0.6 * math.exp(y0) * v, rel=1e-14)
    assert result.dw_part == pytest.approx(0.8 * math.exp(y0) * w, rel=1e-14)
    assert result.scheme is Scheme.EULER and result.grid_n == 1


def test_trapezoid_single_step(hand_path):
    params = ModelParams(rho=0.6)
    y0, y1, v, w = 0.2, -0.1, 0.3, -0.4
    result = trapezoid(hand_path([y0, y1], [v], [w]), params)

    assert result.riemann_part == pytest.approx(-0.25 * (math.exp(2 * y0) + math.exp(2 * y1)), rel=1e-14)
    # dV stays left-point
    assert result.dv_part == pytest.approx(0.6 * math.exp(y0) * v, rel=1e-14)
    assert result.dw_part == pytest.approx(0.4 * (math.exp(y0) + math.exp(y1)) * w, rel=1e-14)


def test_two_steps_on_longer_horizon(hand_path):
    params = ModelParams(t_final=2.0)
    y = [0.0, 0.5, -0.5]
    dw = [1.0, -2.0]
    path = hand_path(y, [0.0, 0.0], dw, t_final=2.0)

    e = euler(path, params)
    assert e.riemann_part == pytest.approx(-0.5 * (1.0 + math.exp(1.0)), rel=1e-14)
    assert e.dw_part == pytest.approx(1.0 - 2.0 * math.exp(0.5), rel=1e-14)

    tr = trapezoid(path, params)
    expected_riemann = -0.25 * ((1.0 + math.exp(1.0)) + (math.exp(1.0) + math.exp(-1.0)))
    expected_dw = 0.5 * ((1.0 + math.exp(0.5)) * 1.0 + (math.exp(0.5) + math.exp(-0.5)) * -2.0)
    assert tr.riemann_part == pytest.approx(expected_riemann, rel=1e-14)
    assert tr.dw_part == pytest.approx(expected_dw, rel=1e-14)


def test_zero_path_gives_half_horizon(hand_path):
    params = ModelParams(t_final=3.0)
    path = hand_path(np.zeros(9), np.zeros(8), np.zeros(8), t_final=3.0)
    assert euler(path, params).value == -1.5
    assert trapezoid(path, params).value == -1.5


def test_constant_path_schemes_agree_exactly(hand_path):
    params = ModelParams(rho=-0.3)
    rng = np.random.default_rng(0)
    path = hand_path(np.full(33, 0.37), rng.normal(size=32), rng.normal(size=32))
    e, tr = euler(path, params), trapezoid(path, params)
    assert e.riemann_part == tr.riemann_part
    assert e.dw_part == tr.dw_part
    assert e.value == tr.value


def test_riemann_difference_is_endpoint_correction(hand_path):
    rng = np.random.default_rng(1)
    y = rng.normal(scale=0.3, size=17)
    path = hand_path(y, np.zeros(16), np.zeros(16))
    params = ModelParams()
    step = 1.0 / 16

    gap = trapezoid(path, params).riemann_part - euler(path, params).riemann_part
    assert gap == pytest.approx(-0.25 * step * (math.exp(2 * y[-1]) - math.exp(2 * y[0])), rel=1e-10)


def test_uncorrelated_case_has_no_dv_part(hand_path):
    path = hand_path([0.1, 0.2, 0.3], [5.0, -5.0], [0.1, 0.1])
    assert euler(path, ModelParams()).dv_part == 0.0
    assert trapezoid(path, ModelParams()).dv_part == 0.0


def test_value_is_sum_of_parts(hand_path):
    rng = np.random.default_rng(2)
    path = hand_path(rng.normal(size=9), rng.normal(size=8), rng.normal(size=8))
    for result in (euler(path, ModelParams(rho=0.4)), trapezoid(path, ModelParams(rho=0.4))):
        assert result.value == result.riemann_part + result.dv_part + result.dw_part


def test_difference_term_by_term(hand_path):
    rng = np.random.default_rng(3)
    y = rng.normal(scale=0.2, size=9)
    dw = rng.normal(scale=0.35, size=8)
    params = ModelParams(rho=0.5)
    path = hand_path(y, rng.normal(size=8), dw)

    ey = np.exp(y)
    expected = -0.25 * (1.0 / 8) * (ey[-1] ** 2 - ey[0] ** 2) + 0.5 * math.sqrt(0.75) * np.sum(
        (ey[1:] - ey[:-1]) * dw
    )
    gap = trapezoid(path, params).value - euler(path, params).value
    assert gap == pytest.approx(expected, rel=1e-10, abs=1e-14)


def test_batched_values_match_single_paths(hand_path):
    rng = np.random.default_rng(4)
    y = rng.normal(size=(3, 5))
    dv = rng.normal(size=(3, 4))
    dw = rng.normal(size=(3, 4))
    params = ModelParams(rho=0.2)
    batch = hand_path(y[0], dv[0], dw[0])
    batched = type(batch)(grid=batch.grid, y=y, dv=dv, dw=dw)

    values = scheme_values(batched, params, Scheme.TRAPEZOID)
    assert values.shape == (3,)
    for i in range(3):
        single = trapezoid(hand_path(y[i], dv[i], dw[i]), params).value
        assert values[i] == pytest.approx(single, rel=1e-14)
    with pytest.raises(ValueError):
        euler(batched, params)


def test_missing_dv_requires_uncorrelated(hand_path):
    path = hand_path([0.0, 0.1], None, [0.2])
    riemann, dv_part, dw_part = scheme_parts(path, ModelParams(), Scheme.EULER)
    assert dv_part == 0.0
    with pytest.raises(ConfigurationError):
        euler(path, ModelParams(rho=0.1))


def test_horizon_mismatch(hand_path):
    path = hand_path([0.0, 0.1], [0.0], [0.2], t_final=1.0)
    with pytest.raises(ConfigurationError):
        trapezoid(path, ModelParams(t_final=2.0))


def test_long_paths_use_compensated_sums(hand_path):
    n = 4096
    rng = np.random.default_rng(5)
    y = rng.normal(scale=0.5, size=n + 1)
    dw = rng.normal(scale=math.sqrt(1.0 / n), size=n)
    path = hand_path(y, np.zeros(n), dw)

    result = euler(path, ModelParams())
    ey = np.exp(y[:-1])
    assert result.riemann_part == -0.5 * (1.0 / n) * math.fsum(ey * ey)
    assert result.dw_part == math.fsum(ey * dw)


def test_price_from_logprice():
    params = ModelParams(s0=100.0)
    assert price_from_logprice(0.0, params) == 100.0
    np.testing.assert_allclose(price_from_logprice(np.array([math.log(2.0)]), params), [200.0])
