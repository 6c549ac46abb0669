"""
options.py
----------
Flags shared by the rough-strong subcommands, config assembly and the
error-to-exit-code mapping.

Precedence: explicit flag > --config file > built-in default.
"""

import functools
import sys
from pathlib import Path
from typing import Any, Callable, Dict, Optional

import click
from pydantic import ValidationError

from rough_strong.core.config import ExperimentConfig
from rough_strong.core.constants import EXIT_VALIDATION
from rough_strong.core.errors import RoughStrongError
from rough_strong.utils.logger import get_logger

logger = get_logger(__name__)

# flag dest -> ModelParams field
PARAM_FLAGS = {
    "hurst": "hurst",
    "lam": "lam",
    "theta": "theta",
    "mu": "mu",
    "rho": "rho",
    "s0": "s0",
    "t_final": "t_final",
}


def _stack(*decorators: Callable) -> Callable:
    def apply(func):
        for decorator in reversed(decorators):
            func = decorator(func)
        return func

    return apply


model_options = _stack(
    click.option("--hurst", type=float, default=None, help="Hurst parameter H in (0, 1/2)."),
    click.option("--lambda", "lam", type=float, default=None, help="Mean-reversion rate lambda > 0."),
    click.option("--theta", type=float, default=None, help="Vol-of-vol theta > 0."),
    click.option("--mu", type=float, default=None, help="Long-run mean of log-volatility."),
    click.option("--rho", type=float, default=None, help="Leverage correlation in (-1, 1)."),
    click.option("--s0", type=float, default=None, help="Initial asset price."),
    click.option("--t-final", "t_final", type=float, default=None, help="Horizon T."),
)

output_options = _stack(
    click.option(
        "--config",
        "config_path",
        type=click.Path(exists=True, dir_okay=False, path_type=Path),
        default=None,
        help="ExperimentConfig JSON file; explicit flags override it.",
    ),
    click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default=None),
    click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None),
)


def build_config(config_path: Optional[Path] = None, **flags: Any) -> ExperimentConfig:
    """Merge --config file contents with explicitly given flags and validate."""
    base = ExperimentConfig.load_json(config_path) if config_path else ExperimentConfig()
    data: Dict[str, Any] = base.model_dump(by_alias=False)

    if "fmt" in flags:
        flags["format"] = flags.pop("fmt")
    for key, value in flags.items():
        if value is None:
            continue
        if key in PARAM_FLAGS:
            data["params"][PARAM_FLAGS[key]] = value
        elif key == "n_list":
            data["n_list"] = [int(v) for v in str(value).split(",") if v.strip()]
        else:
            data[key] = value

    return ExperimentConfig.model_validate(data)


def _describe(exc: ValidationError) -> str:
    parts = []
    for err in exc.errors():
        where = ".".join(str(p) for p in err["loc"])
        parts.append(f"{where}: {err['msg']} (got {err.get('input')!r})")
    return "; ".join(parts)


def handle_errors(command: str) -> Callable:
    """Map library exceptions to the documented exit codes."""

    def decorator(func):
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            try:
                return func(*args, **kwargs)
            except ValidationError as exc:
                click.echo(f"Error: invalid configuration: {_describe(exc)}", err=True)
                sys.exit(EXIT_VALIDATION)
            except RoughStrongError as exc:
                logger.error(f"[CLI] {command} failed | {type(exc).__name__}: {exc}")
                click.echo(f"Error: {exc}", err=True)
                sys.exit(exc.exit_code)
            except ValueError as exc:
                click.echo(f"Error: {exc}", err=True)
                sys.exit(EXIT_VALIDATION)

        return wrapper

    return decorator
