"""
run_constants.py
----------------
Theoretical constants of the strong error for one parameter set.

CLI Usage:
    rough-strong constants --hurst 0.25 --rho -0.7

Programmatic:
    from rough_strong.cli.run_constants import run
    payload = run(ExperimentConfig())
"""

import click

from rough_strong.analysis import theory_constants
from rough_strong.cli.options import build_config, handle_errors, model_options, output_options
from rough_strong.core.config import ExperimentConfig
from rough_strong.kernels import asymptotic_constants
from rough_strong.utils.logger import get_logger
from rough_strong.utils.serialization import dumps_csv, dumps_json, write_text

logger = get_logger(__name__)

KEYS = ("c_euler", "c_trapezoid", "lower_bound", "hurst", "c0", "c1", "variance_y")

# ------------------------------------------------------
# PROGRAMMATIC ENTRYPOINT
# ------------------------------------------------------


def run(config: ExperimentConfig) -> dict:
    theory = theory_constants(config.params)
    kernel = asymptotic_constants(config.params, 1.0)
    return {
        "c_euler": theory.c_euler,
        "c_trapezoid": theory.c_trapezoid,
        "lower_bound": theory.lower_bound,
        "hurst": theory.hurst,
        "c0": kernel.c0,
        "c1": kernel.c1,
        "variance_y": kernel.variance_y,
    }


def render(payload: dict, fmt: str) -> str:
    if fmt == "csv":
        return dumps_csv(KEYS, [[payload[k] for k in KEYS]])
    return dumps_json(payload)


# ------------------------------------------------------
# CLI MODE
# ------------------------------------------------------


@click.command("constants")
@model_options
@output_options
@handle_errors("constants")
def cli(config_path, fmt, out, **params):
    """Emit C_E, C_Tr, the lower-bound constant and c0, c1, R_Y(0)."""
    config = build_config(config_path, fmt=fmt, out=out, **params)
    logger.info(f"[CLI] constants | params={config.params.model_dump(by_alias=True)}")
    write_text(render(run(config), config.format or "json"), config.out)
