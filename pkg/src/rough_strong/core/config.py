# rough_strong/core/config.py
"""
Validated configuration models.

ModelParams carries the model tuple (H, lambda, theta, mu, rho, s0, T); its
invariants are enforced by pydantic so that every downstream function can
assume a valid parameter set. ExperimentConfig adds the command-level knobs
and round-trips through JSON without loss.
"""

from pathlib import Path
from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from rough_strong.core import constants as C


# ---------------------------------------------------------
# MODEL PARAMETERS
# ---------------------------------------------------------
class ModelParams(BaseModel):
    model_config = ConfigDict(frozen=True, populate_by_name=True, extra="forbid")

    hurst: float = Field(C.DEFAULT_HURST, gt=0.0, lt=0.5)
    lam: float = Field(C.DEFAULT_LAMBDA, gt=0.0, alias="lambda")
    theta: float = Field(C.DEFAULT_THETA, gt=0.0)
    mu: float = C.DEFAULT_MU
    rho: float = Field(C.DEFAULT_RHO, gt=-1.0, lt=1.0)
    s0: float = Field(C.DEFAULT_S0, gt=0.0)
    t_final: float = Field(C.DEFAULT_T_FINAL, gt=0.0)


# ---------------------------------------------------------
# EXPERIMENT CONFIG (CLI surface)
# ---------------------------------------------------------
Sampler = Literal["cholesky", "davis-harte"]
Mode = Literal["fast-rho0", "joint"]
OutputFormat = Literal["csv", "json"]


class ExperimentConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    params: ModelParams = Field(default_factory=ModelParams)

    n: int = Field(C.DEFAULT_N, ge=1)
    n_list: List[int] = Field(default_factory=lambda: list(C.DEFAULT_N_LIST))
    fine_factor: int = Field(C.DEFAULT_FINE_FACTOR, ge=2)
    replications: int = Field(C.DEFAULT_REPLICATIONS, ge=1)
    seed: int = Field(C.DEFAULT_SEED, ge=0)
    replication: int = Field(0, ge=0)

    a: float = 1.0
    tau_min: float = Field(0.0, ge=0.0)
    tau_max: float = Field(C.DEFAULT_T_FINAL, ge=0.0)
    tau_steps: int = Field(C.DEFAULT_TAU_STEPS, ge=1)

    sampler: Sampler = "cholesky"
    mode: Mode = "fast-rho0"
    # None selects the command default (json for constants/convergence, csv for kernel/sample)
    format: Optional[OutputFormat] = None
    out: Optional[Path] = None

    threads: Optional[int] = None
    batch_size: Optional[int] = Field(None, ge=1)
    fit_all: bool = False
    check_fourier: bool = False

    @field_validator("n_list")
    @classmethod
    def _n_list_positive_increasing(cls, value: List[int]) -> List[int]:
        if not value:
            raise ValueError("n_list must not be empty")
        if any(n < 1 for n in value):
            raise ValueError("n_list entries must be >= 1")
        if any(b <= a for a, b in zip(value, value[1:])):
            raise ValueError("n_list must be strictly increasing")
        return value

    @field_validator("a")
    @classmethod
    def _a_nonzero(cls, value: float) -> float:
        if value == 0.0:
            raise ValueError("a must be nonzero")
        return value

    @field_validator("tau_max")
    @classmethod
    def _tau_range(cls, value: float, info) -> float:
        tau_min = info.data.get("tau_min", 0.0)
        if value < tau_min:
            raise ValueError(f"tau_max ({value}) must be >= tau_min ({tau_min})")
        return value

    def dump_json(self) -> str:
        return self.model_dump_json(by_alias=True, indent=2)

    @classmethod
    def load_json(cls, path: Path) -> "ExperimentConfig":
        return cls.model_validate_json(Path(path).read_text(encoding="utf-8"))
