from rough_strong.sampler.blocks import (
    CholeskyFactor,
    CovarianceBlocks,
    build_covariance,
    cholesky_factor,
    cross_cov_lags,
)
from rough_strong.sampler.davis_harte import (
    CirculantEmbedding,
    circulant_embedding,
    embedding_size,
    sample_fast_path,
    sample_fou_davis_harte,
)
from rough_strong.sampler.grid import Grid
from rough_strong.sampler.joint import JointPath, SeedInfo, coarsen, sample_dw, sample_joint

__all__ = [
    "CholeskyFactor",
    "CirculantEmbedding",
    "CovarianceBlocks",
    "Grid",
    "JointPath",
    "SeedInfo",
    "build_covariance",
    "cholesky_factor",
    "circulant_embedding",
    "coarsen",
    "cross_cov_lags",
    "embedding_size",
    "sample_dw",
    "sample_fast_path",
    "sample_fou_davis_harte",
    "sample_joint",
]
