"""
montecarlo.py
-------------
Coupled Monte Carlo estimation of the strong (mean-square) error of both
schemes.

Each replication samples one path on the fine grid with n_fine = max(n_list) *
fine_factor steps. The trapezoidal value on that grid is the reference; every
coarse n reuses the same path through `coarsen`, so errors are pathwise.

Replications are cut into fixed batches that do not depend on the number of
threads. Batches run on a joblib thread pool and return partial moments that
are merged in batch order, which makes the report bit-identical for any
thread count.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
from joblib import Parallel, delayed

from rough_strong.analysis.fitting import fit_rate
from rough_strong.analysis.moments import RunningMoments
from rough_strong.analysis.oracles import (
    oracle_mse_conditional_w,
    oracle_mse_euler_martingale,
    oracle_mse_trapezoid_martingale,
)
from rough_strong.analysis.report import ConvergenceReport, ConvergenceRow
from rough_strong.analysis.theory import expected_log_price, theory_constants
from rough_strong.core import constants as C
from rough_strong.core.config import ModelParams
from rough_strong.core.errors import (
    ConfigurationError,
    IncompatibleGrids,
    InsufficientData,
    TractabilityExceeded,
)
from rough_strong.sampler import (
    Grid,
    build_covariance,
    cholesky_factor,
    circulant_embedding,
    coarsen,
    sample_fast_path,
    sample_joint,
)
from rough_strong.schemes import Scheme, scheme_values
from rough_strong.utils.logger import get_logger
from rough_strong.utils.rng import replication_streams

logger = get_logger(__name__)


@dataclass(frozen=True)
class _Plan:
    params: ModelParams
    n_list: Tuple[int, ...]
    grid: Grid
    mode: str
    seed: int
    precomputed: object


def _validate(params: ModelParams, n_list: Sequence[int], fine_factor: int, mode: str) -> int:
    if not n_list:
        raise ConfigurationError("n_list must not be empty")
    if fine_factor < 2:
        # the largest n would coincide with the reference grid and carry zero error
        raise ConfigurationError(f"fine_factor must be >= 2 (got {fine_factor})")
    n_fine = max(n_list) * fine_factor
    bad = [n for n in n_list if n < 1 or n_fine % n != 0]
    if bad:
        raise IncompatibleGrids(f"n values {bad} do not divide the fine grid n={n_fine}")

    if mode == "fast-rho0":
        if params.rho != 0.0:
            raise ConfigurationError(f"mode fast-rho0 requires rho = 0 (got rho={params.rho})")
    elif mode == "joint":
        if n_fine > C.JOINT_MAX_STEPS:
            raise TractabilityExceeded(
                f"Joint sampling on n_fine={n_fine} exceeds the limit of {C.JOINT_MAX_STEPS} steps"
            )
    else:
        raise ConfigurationError(f"Unknown mode '{mode}'")
    return n_fine


def _default_batch_size(plan: _Plan) -> int:
    width = plan.precomputed.m if plan.mode == "fast-rho0" else 2 * plan.grid.n + 1
    return max(1, min(C.MAX_BATCH_SIZE, C.MAX_BATCH_ENTRIES // width))


def _sample(plan: _Plan, replications: Sequence[int]):
    streams = replication_streams(plan.seed, replications)
    if plan.mode == "fast-rho0":
        return sample_fast_path(plan.params, plan.grid, streams, plan.precomputed)
    return sample_joint(plan.precomputed, plan.grid, plan.params, streams)


def _run_batch(plan: _Plan, replications: range) -> Tuple[RunningMoments, RunningMoments]:
    """Moments of [err_E(n)..., err_Tr(n)..., err_E(n) - err_Tr(n)...] and of the reference."""
    fine = _sample(plan, replications)
    reference = scheme_values(fine, plan.params, Scheme.TRAPEZOID)

    euler_sq, trap_sq = [], []
    for n in plan.n_list:
        coarse = coarsen(fine, plan.grid.n // n)
        euler_sq.append((scheme_values(coarse, plan.params, Scheme.EULER) - reference) ** 2)
        trap_sq.append((scheme_values(coarse, plan.params, Scheme.TRAPEZOID) - reference) ** 2)

    euler_sq = np.column_stack(euler_sq)
    trap_sq = np.column_stack(trap_sq)
    errors = np.hstack([euler_sq, trap_sq, euler_sq - trap_sq])
    logger.debug(f"[MC] Batch {replications.start}..{replications.stop - 1} done")
    return RunningMoments.from_batch(errors), RunningMoments.from_batch(reference[:, None])


def _fit(ns: List[int], mse: List[float], fit_all: bool, label: str):
    try:
        return fit_rate(ns, np.sqrt(mse), fit_all=fit_all)
    except InsufficientData as exc:
        logger.warning(f"[MC] No {label} rate fit | {exc}")
        return None, None


def _optional(values: Optional[np.ndarray], index: int) -> Optional[float]:
    return None if values is None else float(values[index])


def mc_strong_error(
    params: ModelParams,
    n_list: Sequence[int],
    fine_factor: int,
    replications: int,
    seed: int,
    mode: str = "fast-rho0",
    threads: Optional[int] = None,
    batch_size: Optional[int] = None,
    fit_all: bool = False,
) -> ConvergenceReport:
    n_list = tuple(sorted(int(n) for n in n_list))
    if replications < 1:
        raise ConfigurationError(f"replications must be >= 1 (got {replications})")
    n_fine = _validate(params, n_list, fine_factor, mode)
    grid = Grid(n_fine, params.t_final)

    logger.info(
        f"[MC] Strong error | mode={mode} | n_list={list(n_list)} | n_fine={n_fine} | "
        f"replications={replications} | seed={seed}"
    )

    if mode == "fast-rho0":
        precomputed = circulant_embedding(params, grid)
    else:
        precomputed = cholesky_factor(build_covariance(params, grid))
        if precomputed.jitter:
            logger.warning(f"[MC] Cholesky factor used jitter {precomputed.jitter:.3e}")

    plan = _Plan(params=params, n_list=n_list, grid=grid, mode=mode, seed=seed, precomputed=precomputed)
    size = batch_size or _default_batch_size(plan)
    batches = [range(start, min(start + size, replications)) for start in range(0, replications, size)]
    logger.info(f"[MC] {len(batches)} batches of up to {size} replications")

    results = Parallel(n_jobs=threads or -1, prefer="threads")(
        delayed(_run_batch)(plan, batch) for batch in batches
    )

    errors = RunningMoments.empty(3 * len(n_list))
    reference = RunningMoments.empty(1)
    for batch_errors, batch_reference in results:
        errors = errors.merge(batch_errors)
        reference = reference.merge(batch_reference)

    k = len(n_list)
    se = errors.std_error
    rows = []
    for i, n in enumerate(n_list):
        rows.append(
            ConvergenceRow(
                n=n,
                replications=errors.count,
                mse_euler=float(errors.mean[i]),
                se_euler=_optional(se, i),
                mse_trap=float(errors.mean[k + i]),
                se_trap=_optional(se, k + i),
                se_diff=_optional(se, 2 * k + i),
                oracle_euler=oracle_mse_euler_martingale(params, n),
                oracle_trap=oracle_mse_trapezoid_martingale(params, n),
                oracle_conditional_w=oracle_mse_conditional_w(params, n),
            )
        )

    ns = [row.n for row in rows]
    rate_e, const_e = _fit(ns, [row.mse_euler for row in rows], fit_all, "Euler")
    rate_t, const_t = _fit(ns, [row.mse_trap for row in rows], fit_all, "trapezoid")
    logger.info(f"[MC] Fitted rates | euler={rate_e} | trapezoid={rate_t} | -H={-params.hurst}")

    return ConvergenceReport(
        rows=rows,
        fitted_rate=rate_e,
        fitted_log_constant=const_e,
        fitted_rate_trapezoid=rate_t,
        fitted_log_constant_trapezoid=const_t,
        theory=theory_constants(params),
        params=params,
        seed=seed,
        fine_factor=fine_factor,
        n_fine=n_fine,
        mode=mode,
        replications=replications,
        reference_mean=float(reference.mean[0]),
        reference_se=_optional(reference.std_error, 0),
        expected_log_price=expected_log_price(params),
    )
