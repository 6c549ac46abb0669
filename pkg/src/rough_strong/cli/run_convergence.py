"""
run_convergence.py
------------------
Monte Carlo strong-error experiment with oracle comparison and rate fits.

CLI Usage:
    rough-strong convergence --replications 10000 --fine-factor 64 --out results/run
    rough-strong convergence --mode joint --rho -0.7 --n-list 16,32,64,128 --fine-factor 16

With --out PATH both PATH.json (full report) and PATH.csv (per-n table) are
written; otherwise the report goes to stdout in the selected format.

Programmatic:
    from rough_strong.cli.run_convergence import run
    report = run(ExperimentConfig(replications=1000))
"""

import click

from rough_strong.analysis import ConvergenceReport, mc_strong_error, render_table
from rough_strong.analysis.report import CSV_COLUMNS
from rough_strong.cli.options import build_config, handle_errors, model_options, output_options
from rough_strong.core.config import ExperimentConfig
from rough_strong.utils.logger import get_logger
from rough_strong.utils.serialization import dumps_csv, dumps_json, write_text

logger = get_logger(__name__)

# ------------------------------------------------------
# PROGRAMMATIC ENTRYPOINT
# ------------------------------------------------------


def run(config: ExperimentConfig) -> ConvergenceReport:
    return mc_strong_error(
        config.params,
        config.n_list,
        config.fine_factor,
        config.replications,
        config.seed,
        mode=config.mode,
        threads=config.threads,
        batch_size=config.batch_size,
        fit_all=config.fit_all,
    )


def emit(report: ConvergenceReport, config: ExperimentConfig) -> None:
    as_json = dumps_json(report.payload())
    as_csv = dumps_csv(CSV_COLUMNS, report.csv_rows())

    if config.out is not None:
        json_path = config.out.with_suffix(".json")
        csv_path = config.out.with_suffix(".csv")
        write_text(as_json, json_path)
        write_text(as_csv, csv_path)
        logger.info(f"[CLI] Wrote {json_path} and {csv_path}")
        return
    write_text(as_csv if config.format == "csv" else as_json, None)


# ------------------------------------------------------
# CLI MODE
# ------------------------------------------------------


@click.command("convergence")
@model_options
@click.option("--n-list", "n_list", type=str, default=None, help="Comma separated, e.g. 16,32,64.")
@click.option("--fine-factor", "fine_factor", type=int, default=None)
@click.option("--replications", type=int, default=None)
@click.option("--seed", type=int, default=None)
@click.option("--mode", type=click.Choice(["fast-rho0", "joint"]), default=None)
@click.option("--threads", type=int, default=None, help="Worker threads (default: all cores).")
@click.option("--batch-size", "batch_size", type=int, default=None)
@click.option("--fit-all", "fit_all", is_flag=True, help="Fit the rate on every n, not only the largest half.")
@click.option("--quiet", is_flag=True, help="Do not print the summary table to stderr.")
@output_options
@handle_errors("convergence")
def cli(config_path, fmt, out, n_list, fine_factor, replications, seed, mode, threads, batch_size, fit_all, quiet, **params):
    """Estimate strong errors of both schemes and fit the convergence rate."""
    config = build_config(
        config_path,
        fmt=fmt,
        out=out,
        n_list=n_list,
        fine_factor=fine_factor,
        replications=replications,
        seed=seed,
        mode=mode,
        threads=threads,
        batch_size=batch_size,
        fit_all=fit_all or None,
        **params,
    )
    report = run(config)
    if not quiet:
        render_table(report)
    emit(report, config)
