import math
from typing import Sequence, Tuple

import numpy as np
from scipy import stats

from rough_strong.core.errors import InsufficientData

MIN_FIT_POINTS = 3


def fit_points(count: int, fit_all: bool = False) -> int:
    """How many of the largest n enter the default fit."""
    return count if fit_all else min(count, max(MIN_FIT_POINTS, math.ceil(count / 2)))


def fit_rate(ns: Sequence[int], rmse: Sequence[float], fit_all: bool = False) -> Tuple[float, float]:
    """
    Least squares of log(RMSE) on log(n) over the largest half of the points
    (all of them with fit_all). Returns (slope, intercept).
    """
    ns = np.asarray(ns, dtype=float)
    rmse = np.asarray(rmse, dtype=float)
    if ns.shape != rmse.shape or ns.ndim != 1:
        raise InsufficientData("n and RMSE must be 1-D sequences of equal length")
    if ns.size < MIN_FIT_POINTS:
        raise InsufficientData(f"Rate fit needs at least {MIN_FIT_POINTS} points (got {ns.size})")
    if np.unique(ns).size != ns.size:
        raise InsufficientData("Rate fit needs distinct values of n")
    if np.any(ns <= 0):
        raise InsufficientData("Rate fit needs positive n")

    order = np.argsort(ns)
    keep = order[-fit_points(ns.size, fit_all) :]
    if np.any(~np.isfinite(rmse[keep])) or np.any(rmse[keep] <= 0):
        raise InsufficientData("Rate fit needs positive finite RMSE at every fitted n")
    fit = stats.linregress(np.log(ns[keep]), np.log(rmse[keep]))
    return float(fit.slope), float(fit.intercept)
