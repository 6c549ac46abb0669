from rough_strong.analysis.fitting import fit_rate
from rough_strong.analysis.moments import RunningMoments
from rough_strong.analysis.montecarlo import mc_strong_error
from rough_strong.analysis.oracles import (
    oracle_mse_conditional_w,
    oracle_mse_euler_martingale,
    oracle_mse_trapezoid_martingale,
)
from rough_strong.analysis.report import ConvergenceReport, ConvergenceRow, render_table
from rough_strong.analysis.theory import TheoryConstants, expected_log_price, theory_constants

__all__ = [
    "ConvergenceReport",
    "ConvergenceRow",
    "RunningMoments",
    "TheoryConstants",
    "expected_log_price",
    "fit_rate",
    "mc_strong_error",
    "oracle_mse_conditional_w",
    "oracle_mse_euler_martingale",
    "oracle_mse_trapezoid_martingale",
    "render_table",
    "theory_constants",
]
