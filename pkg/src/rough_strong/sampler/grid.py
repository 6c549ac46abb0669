from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class Grid:
    """Uniform partition of [0, T] into n steps."""

    n: int
    t_final: float
    step: float = field(init=False)
    times: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"Grid needs n >= 1 (got {self.n})")
        if not self.t_final > 0:
            raise ValueError(f"Grid needs t_final > 0 (got {self.t_final})")
        times = np.arange(self.n + 1, dtype=float) * (self.t_final / self.n)
        times[-1] = self.t_final
        times.setflags(write=False)
        object.__setattr__(self, "step", self.t_final / self.n)
        object.__setattr__(self, "times", times)

    def refines(self, other: "Grid") -> bool:
        """True when every point of `other` is also a point of this grid."""
        return self.t_final == other.t_final and self.n % other.n == 0

    def coarsened(self, factor_m: int) -> "Grid":
        return Grid(self.n // factor_m, self.t_final)
