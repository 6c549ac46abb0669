"""
moments.py
----------
Mean and variance of vector-valued observations: two-pass moments within a
batch, Chan et al. pairwise merge across batches. Partial accumulators from
independent batches combine associatively, so batches may be evaluated in any
order and merged in a fixed one.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np


@dataclass
class RunningMoments:
    count: int
    mean: np.ndarray
    m2: np.ndarray

    @classmethod
    def empty(cls, width: int) -> "RunningMoments":
        return cls(count=0, mean=np.zeros(width), m2=np.zeros(width))

    @classmethod
    def from_batch(cls, values: np.ndarray) -> "RunningMoments":
        """Moments of the rows of a (count, width) array (two-pass within the batch)."""
        values = np.atleast_2d(np.asarray(values, dtype=float))
        mean = values.mean(axis=0)
        return cls(count=values.shape[0], mean=mean, m2=((values - mean) ** 2).sum(axis=0))

    def merge(self, other: "RunningMoments") -> "RunningMoments":
        if other.count == 0:
            return RunningMoments(self.count, self.mean.copy(), self.m2.copy())
        if self.count == 0:
            return RunningMoments(other.count, other.mean.copy(), other.m2.copy())

        total = self.count + other.count
        delta = other.mean - self.mean
        mean = self.mean + delta * (other.count / total)
        m2 = self.m2 + other.m2 + delta * delta * (self.count * other.count / total)
        return RunningMoments(total, mean, m2)

    @property
    def variance(self) -> Optional[np.ndarray]:
        """Unbiased sample variance; None below two observations."""
        if self.count < 2:
            return None
        return self.m2 / (self.count - 1)

    @property
    def std_error(self) -> Optional[np.ndarray]:
        var = self.variance
        return None if var is None else np.sqrt(var / self.count)
