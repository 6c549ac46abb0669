"""
davis_harte.py
--------------
O(n log n) exact sampling of the stationary log-volatility on a uniform grid by
circulant embedding (Davis-Harte).

The covariance row (R_Y(k step))_{k=0..m/2} is mirrored into the first row of
an m-circulant, m = 2^(ceil(log2(n+1)) + 1). Its eigenvalues are the FFT of
that row. Small negative eigenvalues from roundoff are clamped to zero; a
genuinely indefinite embedding aborts.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from rough_strong.core import constants as C
from rough_strong.core.config import ModelParams
from rough_strong.core.errors import EmbeddingNotPSD
from rough_strong.kernels import r_y
from rough_strong.sampler.grid import Grid
from rough_strong.sampler.joint import JointPath, StreamsLike, _as_list, sample_dw, seed_info_of
from rough_strong.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class CirculantEmbedding:
    grid: Grid
    m: int
    first_row: np.ndarray
    eigenvalues: np.ndarray
    clamped: int = 0


def embedding_size(n: int) -> int:
    # n.bit_length() == ceil(log2(n + 1))
    return 2 ** (n.bit_length() + 1)


def circulant_embedding(params: ModelParams, grid: Grid) -> CirculantEmbedding:
    m = embedding_size(grid.n)
    half = m // 2
    row = np.asarray(r_y(params, grid.step * np.arange(half + 1)))
    first_row = np.concatenate([row, row[half - 1 : 0 : -1]])

    eigenvalues = np.fft.fft(first_row).real
    tol = C.EIGEN_CLAMP_TOL * float(np.max(eigenvalues))
    smallest = float(np.min(eigenvalues))
    if smallest < -tol:
        logger.error(f"[SAMPLER] Circulant embedding indefinite | n={grid.n} | min eig={smallest:.3e}")
        raise EmbeddingNotPSD(
            f"Circulant embedding of size {m} has eigenvalue {smallest:.3e} below -{tol:.3e}",
            min_eigenvalue=smallest,
        )

    negative = eigenvalues < 0
    clamped = int(np.count_nonzero(negative))
    if clamped:
        logger.info(f"[SAMPLER] Clamped {clamped} roundoff-negative eigenvalues to 0")
        eigenvalues = np.where(negative, 0.0, eigenvalues)

    return CirculantEmbedding(
        grid=grid, m=m, first_row=first_row, eigenvalues=eigenvalues, clamped=clamped
    )


def _hermitian_spectrum(xi: np.ndarray, half: int) -> np.ndarray:
    """Non-negative-frequency half of a Hermitian complex Gaussian vector built from m normals."""
    z = np.empty(xi.shape[:-1] + (half + 1,), dtype=complex)
    z[..., 0] = xi[..., 0]
    z[..., half] = xi[..., 1]
    z[..., 1:half] = (xi[..., 2 : half + 1] + 1j * xi[..., half + 1 :]) / np.sqrt(2.0)
    return z


def sample_fou_davis_harte(
    params: ModelParams,
    grid: Grid,
    streams: StreamsLike,
    embedding: Optional[CirculantEmbedding] = None,
) -> np.ndarray:
    """Y_{t_0..t_n} (mean included) drawn from the 'dh' streams; one row per stream."""
    if embedding is None:
        embedding = circulant_embedding(params, grid)
    elif embedding.grid != grid:
        raise ValueError(f"Embedding was built for n={embedding.grid.n}, grid has n={grid.n}")

    items, batched = _as_list(streams)
    m, half = embedding.m, embedding.m // 2
    xi = np.stack([s.dh.standard_normal(m) for s in items])

    spectrum = np.sqrt(embedding.eigenvalues[: half + 1]) * _hermitian_spectrum(xi, half)
    y = np.sqrt(m) * np.fft.irfft(spectrum, n=m, axis=-1)[:, : grid.n + 1] + params.mu
    return y if batched else y[0]


def sample_fast_path(
    params: ModelParams,
    grid: Grid,
    streams: StreamsLike,
    embedding: Optional[CirculantEmbedding] = None,
) -> JointPath:
    """Y by circulant embedding plus independent dW; V is not sampled (rho = 0 only)."""
    y = sample_fou_davis_harte(params, grid, streams, embedding)
    return JointPath(grid=grid, y=y, dv=None, dw=sample_dw(grid, streams), seed_info=seed_info_of(streams))
