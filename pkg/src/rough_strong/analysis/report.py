"""
report.py
---------
Result models of a strong-error experiment and their renderings
(JSON payload, per-n CSV, console table).
"""

from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict
from rich.console import Console
from rich.table import Table

from rough_strong.analysis.theory import TheoryConstants
from rough_strong.core.config import ModelParams

CSV_COLUMNS = ("n", "mse_euler", "se_euler", "mse_trap", "se_trap", "oracle_euler", "oracle_trap")


class ConvergenceRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int
    replications: int
    mse_euler: float
    se_euler: Optional[float]
    mse_trap: float
    se_trap: Optional[float]
    # standard error of the paired difference of squared errors (Euler - Trapezoid)
    se_diff: Optional[float]
    oracle_euler: float
    oracle_trap: float
    oracle_conditional_w: float


class ConvergenceReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    rows: List[ConvergenceRow]
    fitted_rate: Optional[float]
    fitted_log_constant: Optional[float]
    fitted_rate_trapezoid: Optional[float]
    fitted_log_constant_trapezoid: Optional[float]
    theory: TheoryConstants
    params: ModelParams
    seed: int
    fine_factor: int
    n_fine: int
    mode: Literal["fast-rho0", "joint"]
    replications: int
    reference_mean: float
    reference_se: Optional[float]
    expected_log_price: float

    def payload(self) -> dict:
        return self.model_dump(mode="python", by_alias=True)

    def csv_rows(self) -> List[list]:
        return [[getattr(row, col) for col in CSV_COLUMNS] for row in self.rows]


def _fmt(value: Optional[float], spec: str = ".4e") -> str:
    return "-" if value is None else format(value, spec)


def render_table(report: ConvergenceReport, console: Optional[Console] = None) -> None:
    console = console or Console(stderr=True)
    table = Table(title=f"Strong error | mode={report.mode} | n_fine={report.n_fine} | R={report.replications}")
    for col in ("n", "MSE Euler", "+/-", "oracle E", "MSE Trap", "+/-", "oracle Tr"):
        table.add_column(col, justify="right")

    for row in report.rows:
        table.add_row(
            str(row.n),
            _fmt(row.mse_euler),
            _fmt(row.se_euler, ".1e"),
            _fmt(row.oracle_euler),
            _fmt(row.mse_trap),
            _fmt(row.se_trap, ".1e"),
            _fmt(row.oracle_trap),
        )
    console.print(table)
    console.print(
        f"rate Euler={_fmt(report.fitted_rate, '.4f')} | rate Trap={_fmt(report.fitted_rate_trapezoid, '.4f')}"
        f" | -H={-report.theory.hurst:.4f} | C_E={report.theory.c_euler:.6f}"
        f" | C_Tr={report.theory.c_trapezoid:.6f} | lower={report.theory.lower_bound:.6f}"
    )
