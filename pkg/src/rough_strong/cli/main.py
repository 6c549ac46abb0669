"""
main.py
-------
`rough-strong` command group.

    rough-strong constants   theoretical constants C_E, C_Tr, lower bound
    rough-strong kernel      R_Y / R_Z table
    rough-strong sample      one sampled path
    rough-strong convergence Monte Carlo strong-error report

Exit codes: 0 ok, 2 validation, 3 quadrature, 4 sampler, 5 tractability.
"""

import click

from rough_strong import __version__
from rough_strong.cli import run_constants, run_convergence, run_kernel, run_sample


@click.group()
@click.version_option(__version__, prog_name="rough-strong")
def cli():
    """Strong approximation of log-prices under stationary fOU rough volatility."""


cli.add_command(run_constants.cli)
cli.add_command(run_kernel.cli)
cli.add_command(run_sample.cli)
cli.add_command(run_convergence.cli)


if __name__ == "__main__":
    cli()
