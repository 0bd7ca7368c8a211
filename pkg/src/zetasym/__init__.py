"""Verification library for sharpened symmetry inequalities of the Riemann
zeta function and the Ramanujan tau Dirichlet series."""

from .config import DEFAULT_CONFIG, EvalConfig
from .errors import (AccuracyError, BracketError, ConvergenceError,
                     DomainError, NonFiniteError, OverflowAbort, PoleError,
                     ZetaSymError)

__all__ = [
    "DEFAULT_CONFIG", "EvalConfig",
    "ZetaSymError", "DomainError", "PoleError", "NonFiniteError",
    "AccuracyError", "ConvergenceError", "BracketError", "OverflowAbort",
]

__version__ = "0.1.0"
