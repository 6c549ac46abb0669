"""
blocks.py
---------
Covariance of the joint Gaussian vector (Y^c_{t_0..t_n}, Delta_0 V .. Delta_{n-1} V)
and its Cholesky factor.

Layout of the (2n+1)-square matrix:

    [ C11   C12 ]      C11[i, j] = R_Y(|t_i - t_j|)
    [ C12'  C22 ]      C12[i, j] = E Y^c_{t_i} Delta_j V   (zero for i <= j)
                       C22       = step * I

(Y^c, V) is jointly shift invariant, so C12[i, j] only depends on i - j and
both C11 and C12 are Toeplitz. Only n + 1 kernel values and n cross
covariances are evaluated.
"""

from dataclasses import dataclass

import numpy as np
from scipy import linalg

from rough_strong.core import constants as C
from rough_strong.core.config import ModelParams
from rough_strong.core.errors import NotPositiveDefinite
from rough_strong.kernels import cross_cov_yc_dv, r_y
from rough_strong.sampler.grid import Grid
from rough_strong.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class CovarianceBlocks:
    grid: Grid
    c11: np.ndarray
    c12: np.ndarray
    c22: np.ndarray
    full: np.ndarray

    @property
    def dim(self) -> int:
        return self.full.shape[0]


@dataclass(frozen=True)
class CholeskyFactor:
    grid: Grid
    lower: np.ndarray
    # diagonal jitter added before the successful factorisation (0.0 if none)
    jitter: float = 0.0

    def reconstruction_error(self, blocks: CovarianceBlocks) -> float:
        """max |L L' - full|."""
        return float(np.max(np.abs(self.lower @ self.lower.T - blocks.full)))


def cross_cov_lags(params: ModelParams, grid: Grid) -> np.ndarray:
    """E Y^c_{k step} (V_step - V_0) for k = 0..n."""
    lags = np.zeros(grid.n + 1)
    for k in range(1, grid.n + 1):
        lags[k] = cross_cov_yc_dv(params, k * grid.step, 0.0, grid.step)
    return lags


def build_covariance(params: ModelParams, grid: Grid) -> CovarianceBlocks:
    logger.info(f"[SAMPLER] Building covariance | n={grid.n} | dim={2 * grid.n + 1}")

    c11 = linalg.toeplitz(np.asarray(r_y(params, grid.times)))
    c12 = linalg.toeplitz(cross_cov_lags(params, grid), np.zeros(grid.n))
    c22 = grid.step * np.eye(grid.n)

    full = np.block([[c11, c12], [c12.T, c22]])
    for block in (c11, c12, c22, full):
        block.setflags(write=False)
    return CovarianceBlocks(grid=grid, c11=c11, c12=c12, c22=c22, full=full)


def cholesky_factor(blocks: CovarianceBlocks) -> CholeskyFactor:
    """
    Dense lower Cholesky factor of blocks.full. On failure one retry with
    diagonal jitter CHOLESKY_JITTER * max(diag) is attempted and logged.
    """
    full = blocks.full
    try:
        lower = linalg.cholesky(full, lower=True)
        jitter = 0.0
    except linalg.LinAlgError:
        jitter = C.CHOLESKY_JITTER * float(np.max(np.diag(full)))
        logger.warning(f"[SAMPLER] Cholesky failed | retrying with diagonal jitter {jitter:.3e}")
        try:
            lower = linalg.cholesky(full + jitter * np.eye(full.shape[0]), lower=True)
        except linalg.LinAlgError as exc:
            raise NotPositiveDefinite(
                f"Covariance of dimension {full.shape[0]} is not positive definite "
                f"even with jitter {jitter:.3e}"
            ) from exc

    lower.setflags(write=False)
    return CholeskyFactor(grid=blocks.grid, lower=lower, jitter=jitter)
