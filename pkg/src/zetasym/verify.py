"""Reproduction engine: threshold bisection, counterexample evaluation,
inequality-chain checks, and grid scans for both symmetry theorems."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Callable, Optional, Sequence

from . import bounds, specfun, tau
from .config import DEFAULT_CONFIG, EvalConfig
from .errors import BracketError, DomainError, NonFiniteError

ZETA_T_THRESHOLD = 6.29073
TAU_T_THRESHOLD = 3.8085
COUNTEREXAMPLE_T = 6.2898
NEAR_ZERO_CUTOFF = 1e-6
CHAIN_EPS = 1e-9


@dataclass(frozen=True)
class ThresholdResult:
    """A bisection bracket [lo, hi] around the unique sign change."""

    lo: float
    hi: float
    f_lo: float
    f_hi: float
    iterations: int
    tol: float

    def __post_init__(self) -> None:
        if not (self.f_lo < 0.0 < self.f_hi and self.lo < self.hi
                and self.hi - self.lo <= self.tol):
            raise DomainError("inconsistent ThresholdResult")


@dataclass(frozen=True)
class ChainReport:
    """The four layers of the inequality chain at one point."""

    sigma: float
    t: float
    h_exact: float
    rhs_true_digamma: float   # Re psi(1/2 + it) - 2 pi e^{-pi t} - log 2pi
    rhs_bound: float          # same with the closed-form digamma lower bound
    g_of_t: float

    def ordered(self, eps: float = CHAIN_EPS) -> bool:
        w = self.sigma - 0.5
        return (self.h_exact >= w * self.rhs_true_digamma - eps
                and w * self.rhs_true_digamma >= w * self.rhs_bound - eps
                and w * self.rhs_bound >= w * self.g_of_t - eps)


@dataclass
class ScanReport:
    """Outcome of a grid scan of one symmetry inequality."""

    sigma_range: tuple[float, float, float]
    t_range: tuple[float, float, float]
    points_checked: int = 0
    violations: list[tuple[float, float, float]] = field(default_factory=list)
    min_margin: float = math.inf
    min_margin_at: Optional[tuple[float, float]] = None
    near_zero_flags: list[tuple[float, float, float]] = field(default_factory=list)
    # per-point (sigma, t, margin, flag) rows in sigma-major grid order,
    # retained for CSV emission and plotting
    points: list[tuple[float, float, float, int]] = field(default_factory=list)


def grid_points(lo: float, hi: float, step: float) -> list[float]:
    """Closed on lo, half-open stepping, final point clamped to hi."""
    if step <= 0:
        raise DomainError("step must be positive")
    if hi < lo:
        raise DomainError("range hi must be >= lo")
    pts: list[float] = []
    k = 0
    eps = 1e-12 * max(1.0, abs(hi))
    while True:
        v = lo + k * step
        if v >= hi - eps:
            break
        pts.append(v)
        k += 1
    pts.append(hi)
    return pts


def find_threshold(f: Callable[[float], float], bracket_lo: float,
                   bracket_hi: float, tol: float) -> ThresholdResult:
    """Bisection for the sign change of a monotone-increasing function."""
    if tol <= 0:
        raise DomainError("tol must be positive")
    if bracket_lo >= bracket_hi:
        raise DomainError("bracket_lo must be < bracket_hi")
    f_lo, f_hi = f(bracket_lo), f(bracket_hi)
    if not (math.isfinite(f_lo) and math.isfinite(f_hi)):
        raise NonFiniteError("bracket endpoint evaluated nonfinite")
    if not f_lo < 0.0 < f_hi:
        raise BracketError(
            f"no sign change: f({bracket_lo}) = {f_lo}, f({bracket_hi}) = {f_hi}")
    lo, hi = bracket_lo, bracket_hi
    iterations = 0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        f_mid = f(mid)
        if not math.isfinite(f_mid):
            raise NonFiniteError(f"f({mid}) is nonfinite")
        iterations += 1
        if f_mid < 0.0:
            lo, f_lo = mid, f_mid
        elif f_mid > 0.0:
            hi, f_hi = mid, f_mid
        else:
            # exact zero: shrink to a one-ulp straddle around it
            lo, hi = mid - 0.25 * (hi - lo), mid + 0.25 * (hi - lo)
            f_lo, f_hi = f(lo), f(hi)
    return ThresholdResult(lo=lo, hi=hi, f_lo=f_lo, f_hi=f_hi,
                           iterations=iterations, tol=tol)


def verify_counterexample(cfg: EvalConfig = DEFAULT_CONFIG,
                          t: float = COUNTEREXAMPLE_T) -> float:
    """|zeta(0.48 - it)| / |zeta(0.52 + it)| - 1.

    At the default t this must come out below -8e-8: the symmetry
    inequality genuinely fails just under the threshold.
    """
    if cfg.target_abs_err > 1e-12:
        raise DomainError("counterexample needs target_abs_err <= 1e-12")
    num = abs(specfun.zeta(complex(0.48, -t), cfg))
    den = abs(specfun.zeta(complex(0.52, t), cfg))
    return num / den - 1.0


def check_chain(sigma: float, t: float,
                cfg: EvalConfig = DEFAULT_CONFIG) -> ChainReport:
    """Evaluate all four layers of the inequality chain at (sigma, t)."""
    if sigma <= 0.5:
        raise DomainError("chain is defined for sigma > 1/2")
    if t <= 0:
        raise DomainError("t must be positive")
    decay = 2.0 * math.pi * math.exp(-math.pi * t)
    return ChainReport(
        sigma=sigma, t=t,
        h_exact=specfun.h_value(complex(sigma, t), cfg),
        rhs_true_digamma=specfun.re_digamma(0.5, t, cfg) - decay - bounds.LOG_2PI,
        rhs_bound=bounds.lower_bound_re_digamma(0.5, t) - decay - bounds.LOG_2PI,
        g_of_t=bounds.G(t),
    )


def monotonicity_probe(f: Callable[[float], float], lo: float, hi: float,
                       step: float) -> tuple[bool, Optional[float]]:
    """True iff f(t + step) > f(t) at every sampled t; else first offender."""
    if not (lo < hi and step > 0):
        raise DomainError("need lo < hi and step > 0")
    prev = f(lo)
    for t in grid_points(lo, hi, step)[1:]:
        cur = f(t)
        if not math.isfinite(cur):
            raise NonFiniteError(f"f({t}) is nonfinite")
        if cur <= prev:
            return False, t
        prev = cur
    return True, None


def _zeta_row(sigma: float, t_values: Sequence[float],
              cfg: EvalConfig) -> list[tuple[float, float, float, float]]:
    """(sigma, t, margin, |zeta(s)|) for one sigma across all t."""
    out = []
    for t in t_values:
        s = complex(sigma, t)
        margin = specfun.h_value(s, cfg)
        abs_zeta = abs(specfun.zeta(s, cfg))
        out.append((sigma, t, margin, abs_zeta))
    return out


def _tau_row(sigma: float, t_values: Sequence[float], table: tau.TauTable,
             cfg: EvalConfig) -> list[tuple[float, float, float, float]]:
    """(sigma, t, margin, |F(s)|) for one sigma; Lambda shared per point."""
    log_2pi = math.log(2.0 * math.pi)
    out = []
    for t in t_values:
        s = complex(sigma, t)
        lam = tau.lambda_completed(s, table, cfg)
        # F(s) = Lambda(s) (2 pi)^s / Gamma(s); Lambda(12 - s) = Lambda(s).
        log_f_s = math.log(abs(lam)) + sigma * log_2pi - specfun.log_gamma(s, cfg).real \
            if lam != 0 else -math.inf
        log_f_mirror = math.log(abs(lam)) + (12.0 - sigma) * log_2pi \
            - specfun.log_gamma(12.0 - s, cfg).real if lam != 0 else -math.inf
        margin = log_f_mirror - log_f_s
        abs_f = math.exp(log_f_s) if lam != 0 else 0.0
        out.append((sigma, t, margin, abs_f))
    return out


def _assemble(report: ScanReport,
              rows: Sequence[Sequence[tuple[float, float, float, float]]]) -> ScanReport:
    for row in rows:
        for sigma, t, margin, modulus in row:
            report.points.append((sigma, t, margin, int(modulus < NEAR_ZERO_CUTOFF)))
            report.points_checked += 1
            if modulus < NEAR_ZERO_CUTOFF:
                report.near_zero_flags.append((sigma, t, modulus))
                continue
            if margin < report.min_margin:
                report.min_margin = margin
                report.min_margin_at = (sigma, t)
            if margin <= 0.0:
                report.violations.append((sigma, t, margin))
    report.violations.sort(key=lambda v: (v[1], v[0]))
    report.near_zero_flags.sort(key=lambda v: (v[1], v[0]))
    return report


def _run_rows(worker, sigma_values, workers: int):
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(worker, sigma_values))
    return [worker(sigma) for sigma in sigma_values]


def scan_zeta_inequality(sigma_range: tuple[float, float, float],
                         t_range: tuple[float, float, float],
                         cfg: EvalConfig = DEFAULT_CONFIG,
                         workers: int = 1,
                         allow_outside: bool = False) -> ScanReport:
    """Scan margin = log|zeta(1-s)| - log|zeta(s)| = h(s) over the grid.

    Points with |zeta(s)| < 1e-6 are flagged (the inequality is vacuous at
    zeros) and excluded from min_margin and the violation count.
    """
    if not allow_outside:
        if sigma_range[0] <= 0.5:
            raise DomainError("sigma range must start above 1/2")
        if t_range[0] < ZETA_T_THRESHOLD:
            raise DomainError(
                f"t range must start at >= {ZETA_T_THRESHOLD} (or pass allow_outside)")
    sigmas = grid_points(*sigma_range)
    ts = grid_points(*t_range)
    rows = _run_rows(partial(_zeta_row, t_values=ts, cfg=cfg), sigmas, workers)
    return _assemble(ScanReport(sigma_range=sigma_range, t_range=t_range), rows)


def scan_tau_inequality(sigma_range: tuple[float, float, float],
                        t_range: tuple[float, float, float],
                        table: tau.TauTable,
                        cfg: EvalConfig = DEFAULT_CONFIG,
                        workers: int = 1,
                        allow_outside: bool = False) -> ScanReport:
    """Scan margin = log|F(12-s)| - log|F(s)| over the grid."""
    if not allow_outside:
        if not (6.0 < sigma_range[0] and sigma_range[1] < 6.5):
            raise DomainError("sigma range must lie inside (6, 13/2)")
        if t_range[0] < TAU_T_THRESHOLD:
            raise DomainError(
                f"t range must start at >= {TAU_T_THRESHOLD} (or pass allow_outside)")
    sigmas = grid_points(*sigma_range)
    ts = grid_points(*t_range)
    rows = _run_rows(partial(_tau_row, t_values=ts, table=table, cfg=cfg),
                     sigmas, workers)
    return _assemble(ScanReport(sigma_range=sigma_range, t_range=t_range), rows)
