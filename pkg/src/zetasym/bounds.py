"""The explicit bound chain for the symmetry inequalities.

All closed forms; double precision throughout.  Near the thresholds the
leading cancellation (J - log 2pi ~ 1e-4) still leaves ~11 significant
digits, ample for 1e-6 bisection brackets.

t <= 0 is rejected rather than symmetrized; callers pass |t|.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

SQRT3 = math.sqrt(3.0)
LOG_2PI = math.log(2.0 * math.pi)
P3_MAX = SQRT3 / 216.0
P3_ARGMAX = (3.0 - SQRT3) / 6.0


@dataclass(frozen=True)
class BoundPoint:
    """A (sigma, t) pair; the bound chain is only claimed for sigma >= 1/2, t > 0."""

    sigma: float
    t: float

    def __post_init__(self) -> None:
        if not self.t > 0:
            raise DomainError("t must be positive")
        if self.sigma < 0.5:
            raise DomainError("sigma must be >= 1/2 for bound-chain use")


def p3(x: float) -> float:
    """The cubic x (2x^2 - 3x + 1) / 12 on [0, 1]."""
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"p3 domain is [0, 1], got {x!r}")
    return x * (2.0 * x * x - 3.0 * x + 1.0) / 12.0


def integral_tail(a: float, t: float) -> float:
    """Closed form of int_0^inf dx / ((a + x)^2 + t^2)^2.

    Equals arctan(t/a)/(2 t^3) - a / (2 t^2 (a^2 + t^2)); strictly
    decreasing in a at fixed t.
    """
    if a <= 0 or t <= 0:
        raise DomainError("integral_tail requires a > 0 and t > 0")
    return math.atan(t / a) / (2.0 * t**3) - a / (2.0 * t * t * (a * a + t * t))


def J(sigma: float, t: float) -> float:
    """First three terms of the digamma lower bound:
    (1/2) log(sigma^2+t^2) - sigma/(2(sigma^2+t^2)) - (sigma^2-t^2)/(12(sigma^2+t^2)^2).
    """
    m = sigma * sigma + t * t
    if m == 0.0:
        raise DomainError("J undefined at (0, 0)")
    return 0.5 * math.log(m) - sigma / (2.0 * m) - (sigma * sigma - t * t) / (12.0 * m * m)


def dJ_dsigma(sigma: float, t: float) -> float:
    """Closed-form sigma-derivative of J; nonnegative for sigma >= 1/2:
    (sigma^3 (1 + 3 sigma + 6 sigma^2) + 3 t^2 (sigma - 1/2)(2 t^2 + 4 sigma (sigma + 1/2)))
        / (6 (sigma^2 + t^2)^3).
    """
    m = sigma * sigma + t * t
    if m == 0.0:
        raise DomainError("dJ_dsigma undefined at (0, 0)")
    num = (sigma**3 * (1.0 + 3.0 * sigma + 6.0 * sigma * sigma)
           + 3.0 * t * t * (sigma - 0.5) * (2.0 * t * t + 4.0 * sigma * (sigma + 0.5)))
    return num / (6.0 * m**3)


def lower_bound_re_digamma(sigma: float, t: float) -> float:
    """J(sigma, t) - (sqrt(3)/36) * integral_tail(sigma, t).

    Contractually <= Re psi(sigma + i t); claimed only for sigma >= 1/2.
    """
    if sigma < 0.5:
        raise DomainError("lower bound is only claimed for sigma >= 1/2")
    if t <= 0:
        raise DomainError("t must be positive")
    return J(sigma, t) - (SQRT3 / 36.0) * integral_tail(sigma, t)


def G(t: float) -> float:
    """Threshold function for the zeta inequality:
    J(1/2, t) - sqrt(3)(arctan 2t - 2t/(4t^2+1))/(72 t^3) - 2 pi e^{-pi t} - log 2pi.

    G(t) > 0 certifies log|g(sigma + i t)| > 0 for every sigma > 1/2.
    """
    if t <= 0:
        raise DomainError("G requires t > 0")
    return (lower_bound_re_digamma(0.5, t)
            - 2.0 * math.pi * math.exp(-math.pi * t) - LOG_2PI)


def H(t: float) -> float:
    """Threshold function for the tau inequality:
    J(11/2, t) - sqrt(3)(arctan(2t/11) - 22t/(121+4t^2))/(72 t^3) - log 2pi.

    The - log 2pi term comes from the sufficient condition
    Re psi(sigma_1 + i t) - log 2pi > 0 with sigma_1 in [11/2, 13/2];
    the worst case sigma_1 = 11/2 is used via monotonicity.
    """
    if t <= 0:
        raise DomainError("H requires t > 0")
    return lower_bound_re_digamma(5.5, t) - LOG_2PI
