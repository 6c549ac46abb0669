import numpy as np
import pytest

from rough_strong.core.config import ModelParams
from rough_strong.sampler import Grid, JointPath
from rough_strong.utils.rng import PathStreams, replication_streams


class ZeroGenerator:
    """Stands in for a numpy Generator whose Gaussian draws are all zero."""

    def standard_normal(self, size):
        return np.zeros(size)


@pytest.fixture
def default_params():
    return ModelParams()


@pytest.fixture
def zero_streams():
    zero = ZeroGenerator()
    return PathStreams(seed=0, replication=0, joint=zero, dw=zero, dh=zero)


@pytest.fixture
def many_streams():
    """Per-replication streams for moment checks; seed fixed per test."""

    def make(count, seed=2024):
        return replication_streams(seed, range(count))

    return make


@pytest.fixture
def hand_path():
    """JointPath from explicit values on [0, t_final]."""

    def make(y, dv, dw, t_final=1.0):
        y = np.asarray(y, dtype=float)
        dv = None if dv is None else np.asarray(dv, dtype=float)
        return JointPath(grid=Grid(len(y) - 1, t_final), y=y, dv=dv, dw=np.asarray(dw, dtype=float))

    return make


@pytest.fixture
def cov_with_se():
    """Sample covariances of columns of x against columns of y with standard errors (means known zero)."""

    def estimate(x, y):
        prod = x[:, :, None] * y[:, None, :]
        cov = prod.mean(axis=0)
        se = prod.std(axis=0, ddof=1) / np.sqrt(x.shape[0])
        return cov, se

    return estimate
