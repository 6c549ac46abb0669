"""
run_sample.py
-------------
Draws one path of (Y, dV, dW) for a given (seed, replication).

CLI Usage:
    rough-strong sample --n 64 --seed 7 --replication 3
    rough-strong sample --n 1024 --sampler davis-harte

Programmatic:
    from rough_strong.cli.run_sample import run
    path = run(ExperimentConfig(n=16))
"""

from typing import List

import click

from rough_strong.cli.options import build_config, handle_errors, model_options, output_options
from rough_strong.core.config import ExperimentConfig
from rough_strong.sampler import (
    Grid,
    JointPath,
    build_covariance,
    cholesky_factor,
    sample_fast_path,
    sample_joint,
)
from rough_strong.utils.logger import get_logger
from rough_strong.utils.rng import PathStreams
from rough_strong.utils.serialization import dumps_csv, dumps_json, write_text

logger = get_logger(__name__)

HEADER = ("k", "t", "y", "dv", "dw")

# ------------------------------------------------------
# PROGRAMMATIC ENTRYPOINT
# ------------------------------------------------------


def run(config: ExperimentConfig) -> JointPath:
    grid = Grid(config.n, config.params.t_final)
    streams = PathStreams.for_replication(config.seed, config.replication)

    if config.sampler == "davis-harte":
        return sample_fast_path(config.params, grid, streams)

    factor = cholesky_factor(build_covariance(config.params, grid))
    if factor.jitter:
        logger.warning(f"[CLI] Cholesky factor used jitter {factor.jitter:.3e}")
    return sample_joint(factor, grid, config.params, streams)


def path_rows(path: JointPath) -> List[list]:
    """One row per grid point; increments sit on their left endpoint, absent ones are None."""
    n = path.grid.n
    rows = []
    for k in range(n + 1):
        has_step = k < n
        dv = float(path.dv[k]) if has_step and path.dv is not None else None
        dw = float(path.dw[k]) if has_step else None
        rows.append([k, float(path.grid.times[k]), float(path.y[k]), dv, dw])
    return rows


def render(path: JointPath, config: ExperimentConfig, fmt: str) -> str:
    rows = path_rows(path)
    if fmt == "json":
        return dumps_json(
            {
                "seed": config.seed,
                "replication": config.replication,
                "sampler": config.sampler,
                "n": path.grid.n,
                "t_final": path.grid.t_final,
                "rows": [dict(zip(HEADER, row)) for row in rows],
            }
        )
    return dumps_csv(HEADER, rows)


# ------------------------------------------------------
# CLI MODE
# ------------------------------------------------------


@click.command("sample")
@model_options
@click.option("--n", type=int, default=None, help="Number of grid steps.")
@click.option("--seed", type=int, default=None)
@click.option("--replication", type=int, default=None, help="Replication index of the stream key.")
@click.option("--sampler", type=click.Choice(["cholesky", "davis-harte"]), default=None)
@output_options
@handle_errors("sample")
def cli(config_path, fmt, out, n, seed, replication, sampler, **params):
    """Emit one sampled path as k,t,y,dv,dw."""
    config = build_config(
        config_path, fmt=fmt, out=out, n=n, seed=seed, replication=replication, sampler=sampler, **params
    )
    logger.info(f"[CLI] sample | sampler={config.sampler} | n={config.n} | seed={config.seed}")
    path = run(config)
    write_text(render(path, config, config.format or "csv"), config.out)
