"""
rng.py
------
Counter-based, splittable random streams.

Every replication of an experiment owns one stream per role, keyed by
(experiment seed, replication index, role). Streams are Philox generators
seeded through a SeedSequence spawn key, so two keys never overlap and a
replication can be regenerated in isolation, in any order, on any worker.
"""

from dataclasses import dataclass
from typing import Iterable, List

import numpy as np

ROLES = {"joint": 0, "dw": 1, "dh": 2}


def stream(seed: int, replication: int, role: str) -> np.random.Generator:
    if role not in ROLES:
        raise ValueError(f"Unknown stream role '{role}' (expected one of {sorted(ROLES)})")
    seq = np.random.SeedSequence(entropy=seed, spawn_key=(replication, ROLES[role]))
    return np.random.Generator(np.random.Philox(seq))


@dataclass(frozen=True)
class PathStreams:
    """The three role streams of one replication."""

    seed: int
    replication: int
    joint: np.random.Generator
    dw: np.random.Generator
    dh: np.random.Generator

    @classmethod
    def for_replication(cls, seed: int, replication: int) -> "PathStreams":
        return cls(
            seed=seed,
            replication=replication,
            joint=stream(seed, replication, "joint"),
            dw=stream(seed, replication, "dw"),
            dh=stream(seed, replication, "dh"),
        )


def replication_streams(seed: int, replications: Iterable[int]) -> List[PathStreams]:
    return [PathStreams.for_replication(seed, r) for r in replications]
