import numpy as np
import pytest

from rough_strong.core.config import ModelParams
from rough_strong.core.errors import EmbeddingNotPSD
from rough_strong.kernels import r_y, variance_y
from rough_strong.sampler import (
    Grid,
    build_covariance,
    circulant_embedding,
    cholesky_factor,
    embedding_size,
    sample_fast_path,
    sample_fou_davis_harte,
    sample_joint,
)
from rough_strong.utils.rng import PathStreams

PATHS = 50_000


@pytest.fixture(scope="module")
def dh_samples():
    params = ModelParams()
    grid = Grid(64, 1.0)
    streams = [PathStreams.for_replication(7, r) for r in range(PATHS)]
    return params, grid, sample_fou_davis_harte(params, grid, streams)


def test_embedding_size():
    assert embedding_size(1) == 4
    assert embedding_size(3) == 8
    assert embedding_size(64) == 256
    assert embedding_size(255) == 1024


def test_first_row_is_symmetric_covariance(default_params):
    grid = Grid(16, 1.0)
    embedding = circulant_embedding(default_params, grid)
    row = embedding.first_row
    assert embedding.m == 64 and row.shape == (64,)
    np.testing.assert_array_equal(row[1:], row[1:][::-1])
    expected = r_y(default_params, grid.step * np.arange(33))
    np.testing.assert_array_equal(row[:33], expected)
    assert row[0] == variance_y(default_params)


@pytest.mark.parametrize("hurst", (0.1, 0.25, 0.4))
def test_eigenvalues_non_negative(hurst):
    embedding = circulant_embedding(ModelParams(hurst=hurst), Grid(64, 1.0))
    assert np.all(embedding.eigenvalues >= 0.0)


def test_indefinite_embedding_aborts(monkeypatch, default_params):
    # a row with a negative mean has a negative zero-frequency eigenvalue
    monkeypatch.setattr(
        "rough_strong.sampler.davis_harte.r_y",
        lambda params, tau: np.where(np.asarray(tau) == 0.0, 1.0, -0.5),
    )
    with pytest.raises(EmbeddingNotPSD) as info:
        circulant_embedding(default_params, Grid(8, 1.0))
    assert info.value.min_eigenvalue < 0


def test_zero_draws_give_mean(zero_streams):
    params = ModelParams(mu=0.3)
    grid = Grid(8, 1.0)
    np.testing.assert_array_equal(sample_fou_davis_harte(params, grid, zero_streams), np.full(9, 0.3))


def test_embedding_grid_must_match(default_params):
    embedding = circulant_embedding(default_params, Grid(8, 1.0))
    with pytest.raises(ValueError):
        sample_fou_davis_harte(default_params, Grid(16, 1.0), PathStreams.for_replication(1, 0), embedding)


def test_precomputed_embedding_reproduces_draws(default_params):
    grid = Grid(32, 1.0)
    embedding = circulant_embedding(default_params, grid)
    fresh = sample_fou_davis_harte(default_params, grid, PathStreams.for_replication(3, 1))
    reused = sample_fou_davis_harte(default_params, grid, PathStreams.for_replication(3, 1), embedding)
    np.testing.assert_array_equal(fresh, reused)


def test_stationary_variance(dh_samples):
    params, _, y = dh_samples
    centred = y - params.mu
    variance = (centred**2).mean(axis=0)
    se = (centred**2).std(axis=0, ddof=1) / np.sqrt(PATHS)
    target = variance_y(params)
    assert np.all(np.abs(variance - target) <= 5 * se)
    assert abs(variance.mean() - target) <= 4 * se.mean()


@pytest.mark.parametrize("lag", (1, 2, 4, 16))
def test_lag_covariances(dh_samples, lag):
    params, grid, y = dh_samples
    centred = y - params.mu
    prod = centred[:, 0] * centred[:, lag]
    se = prod.std(ddof=1) / np.sqrt(PATHS)
    assert abs(prod.mean() - r_y(params, lag * grid.step)) <= 4 * se


def test_fast_path_has_no_dv(default_params):
    grid = Grid(16, 1.0)
    path = sample_fast_path(default_params, grid, [PathStreams.for_replication(2, r) for r in range(4)])
    assert path.dv is None
    assert path.y.shape == (4, 17) and path.dw.shape == (4, 16)
    assert path.seed_info.replications == (0, 1, 2, 3)


def test_agrees_with_joint_sampler_in_law(default_params, cov_with_se):
    grid = Grid(8, 1.0)
    streams = [PathStreams.for_replication(5, r) for r in range(20_000)]
    fast = sample_fou_davis_harte(default_params, grid, streams) - default_params.mu
    joint = sample_joint(cholesky_factor(build_covariance(default_params, grid)), grid, default_params, streams)
    exact = joint.y - default_params.mu

    cov_fast, se_fast = cov_with_se(fast, fast)
    cov_joint, se_joint = cov_with_se(exact, exact)
    band = 5 * np.sqrt(se_fast**2 + se_joint**2)
    assert np.all(np.abs(cov_fast - cov_joint) <= band)


@pytest.mark.slow
def test_full_scale_law_and_cross_method(default_params, cov_with_se):
    grid = Grid(64, 1.0)
    streams = [PathStreams.for_replication(13, r) for r in range(100_000)]
    fast = sample_fou_davis_harte(default_params, grid, streams) - default_params.mu
    target = r_y(default_params, grid.times)

    cov_fast, se_fast = cov_with_se(fast[:, :1], fast)
    assert np.all(np.abs(cov_fast[0] - target) <= 4 * se_fast[0])
    squares = fast**2
    se_var = squares.std(axis=0, ddof=1) / np.sqrt(squares.shape[0])
    assert np.all(np.abs(squares.mean(axis=0) - target[0]) <= 4 * se_var)

    factor = cholesky_factor(build_covariance(default_params, grid))
    exact = sample_joint(factor, grid, default_params, streams).y - default_params.mu
    cov_joint, se_joint = cov_with_se(exact[:, :1], exact)
    band = 4 * np.sqrt(se_fast[0] ** 2 + se_joint[0] ** 2)
    assert np.all(np.abs(cov_fast[0] - cov_joint[0]) <= band)
