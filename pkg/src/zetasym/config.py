"""Evaluation configuration: precision targets and truncation knobs."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True)
class EvalConfig:
    """Precision/truncation knobs shared by all numerical evaluators.

    Immutable after construction; safe to share across threads.
    """

    target_abs_err: float = 1e-12
    em_cutoff_n: int = 20          # minimum Euler-Maclaurin summation length
    em_correction_terms: int = 8   # Bernoulli correction terms
    stirling_shift_min_modulus: float = 10.0
    series_nmax: int = 64          # truncation length for coefficient series

    def __post_init__(self) -> None:
        if not (self.target_abs_err > 0 and math.isfinite(self.target_abs_err)):
            raise DomainError("target_abs_err must be a finite positive real")
        if self.em_cutoff_n < 10:
            raise DomainError("em_cutoff_n must be >= 10")
        if not 2 <= self.em_correction_terms <= 15:
            raise DomainError("em_correction_terms must be in [2, 15]")
        if self.stirling_shift_min_modulus < 8:
            raise DomainError("stirling_shift_min_modulus must be >= 8")
        if self.series_nmax < 1:
            raise DomainError("series_nmax must be positive")


DEFAULT_CONFIG = EvalConfig()
