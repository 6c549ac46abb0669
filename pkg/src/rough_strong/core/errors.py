# rough_strong/core/errors.py
"""
Exception hierarchy. Every error carries the CLI exit code it maps to,
so the command layer never has to pattern-match on messages.
"""

from rough_strong.core.constants import (
    EXIT_GENERIC,
    EXIT_QUADRATURE,
    EXIT_SAMPLER,
    EXIT_TRACTABILITY,
    EXIT_VALIDATION,
)


class RoughStrongError(Exception):
    exit_code = EXIT_GENERIC


# ---------------------------------------------------------
# Configuration / validation (exit 2)
# ---------------------------------------------------------
class ConfigurationError(RoughStrongError):
    exit_code = EXIT_VALIDATION


class IncompatibleGrids(ConfigurationError):
    pass


class InsufficientData(ConfigurationError):
    pass


# ---------------------------------------------------------
# Numerics (exit 3)
# ---------------------------------------------------------
class QuadratureNotConverged(RoughStrongError):
    exit_code = EXIT_QUADRATURE

    def __init__(self, message: str, estimate: float | None = None, error: float | None = None):
        super().__init__(message)
        self.estimate = estimate
        self.error = error


# ---------------------------------------------------------
# Samplers (exit 4)
# ---------------------------------------------------------
class SamplerError(RoughStrongError):
    exit_code = EXIT_SAMPLER


class NotPositiveDefinite(SamplerError):
    pass


class EmbeddingNotPSD(SamplerError):
    def __init__(self, message: str, min_eigenvalue: float):
        super().__init__(message)
        self.min_eigenvalue = min_eigenvalue


# ---------------------------------------------------------
# Experiment size guard (exit 5)
# ---------------------------------------------------------
class TractabilityExceeded(RoughStrongError):
    exit_code = EXIT_TRACTABILITY
