from rough_strong.kernels.correlation import cross_cov_yc_dv, gamma_mvn, mvn_scale
from rough_strong.kernels.covariance import (
    LARGE_LAG,
    AsymptoticConstants,
    KernelValue,
    asymptotic_constants,
    kernel_table,
    mean_z,
    r_y,
    r_y_deficit,
    r_y_large_lag_asymptote,
    r_y_small_lag_check,
    r_z,
    r_z_deficit,
    variance_y,
    z_increment_msq,
    z_midpoint_msq,
)
from rough_strong.kernels.fourier import r_y_fourier

__all__ = [
    "LARGE_LAG",
    "AsymptoticConstants",
    "KernelValue",
    "asymptotic_constants",
    "cross_cov_yc_dv",
    "gamma_mvn",
    "kernel_table",
    "mean_z",
    "mvn_scale",
    "r_y",
    "r_y_deficit",
    "r_y_fourier",
    "r_y_large_lag_asymptote",
    "r_y_small_lag_check",
    "r_z",
    "r_z_deficit",
    "variance_y",
    "z_increment_msq",
    "z_midpoint_msq",
]
