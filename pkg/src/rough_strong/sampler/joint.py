"""
joint.py
--------
Exact joint sampling of (Y_{t_k}, Delta_k V, Delta_k W) from a precomputed
Cholesky factor, and restriction of sampled paths to coarser nested grids.

Paths may carry a leading batch axis: sampling from a sequence of per-replication
streams stacks one row per replication, in the order given.
"""

from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from rough_strong.core.config import ModelParams
from rough_strong.core.errors import IncompatibleGrids
from rough_strong.sampler.blocks import CholeskyFactor
from rough_strong.sampler.grid import Grid
from rough_strong.utils.rng import PathStreams

StreamsLike = Union[PathStreams, Sequence[PathStreams]]


@dataclass(frozen=True)
class SeedInfo:
    seed: int
    replications: Tuple[int, ...]


@dataclass(frozen=True)
class JointPath:
    grid: Grid
    y: np.ndarray
    # None when only Y and W were sampled (V never enters the scheme)
    dv: Optional[np.ndarray]
    dw: np.ndarray
    seed_info: Optional[SeedInfo] = field(default=None, compare=False)

    def __post_init__(self):
        n = self.grid.n
        if self.y.shape[-1] != n + 1:
            raise ValueError(f"y has {self.y.shape[-1]} points, grid needs {n + 1}")
        if self.dw.shape[-1] != n or (self.dv is not None and self.dv.shape[-1] != n):
            raise ValueError(f"Increment arrays must have {n} entries")

    @property
    def batch_shape(self) -> Tuple[int, ...]:
        return self.y.shape[:-1]


def _as_list(streams: StreamsLike):
    if isinstance(streams, PathStreams):
        return [streams], False
    return list(streams), True


def seed_info_of(streams: StreamsLike) -> SeedInfo:
    items, _ = _as_list(streams)
    return SeedInfo(seed=items[0].seed, replications=tuple(s.replication for s in items))


def sample_dw(grid: Grid, streams: StreamsLike) -> np.ndarray:
    """Independent Brownian increments with variance step from the 'dw' streams."""
    items, batched = _as_list(streams)
    dw = np.sqrt(grid.step) * np.stack([s.dw.standard_normal(grid.n) for s in items])
    return dw if batched else dw[0]


def sample_joint(
    factor: CholeskyFactor, grid: Grid, params: ModelParams, streams: StreamsLike
) -> JointPath:
    if factor.grid != grid:
        raise IncompatibleGrids(f"Factor was built for n={factor.grid.n}, path grid has n={grid.n}")

    items, batched = _as_list(streams)
    dim = 2 * grid.n + 1
    xi = np.stack([s.joint.standard_normal(dim) for s in items])
    sample = xi @ factor.lower.T

    y = params.mu + sample[:, : grid.n + 1]
    dv = sample[:, grid.n + 1 :]
    dw = sample_dw(grid, items)
    if not batched:
        y, dv, dw = y[0], dv[0], dw[0]
    return JointPath(grid=grid, y=y, dv=dv, dw=dw, seed_info=seed_info_of(items))


def _block_sums(increments: np.ndarray, factor_m: int) -> np.ndarray:
    shape = increments.shape[:-1] + (increments.shape[-1] // factor_m, factor_m)
    return increments.reshape(shape).sum(axis=-1)


def coarsen(path: JointPath, factor_m: int) -> JointPath:
    """Restrict a path to the grid with n / factor_m steps; increments are summed."""
    if factor_m < 1 or path.grid.n % factor_m != 0:
        raise IncompatibleGrids(f"Cannot coarsen n={path.grid.n} by a factor of {factor_m}")
    if factor_m == 1:
        return path

    return JointPath(
        grid=path.grid.coarsened(factor_m),
        y=path.y[..., ::factor_m],
        dv=None if path.dv is None else _block_sums(path.dv, factor_m),
        dw=_block_sums(path.dw, factor_m),
        seed_info=path.seed_info,
    )
