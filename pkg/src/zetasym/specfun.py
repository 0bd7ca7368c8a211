"""Complex special functions built from scratch.

Everything here works in double precision.  Scalars s = sigma + i t are plain
Python ``complex``; NaN/inf inputs are rejected up front rather than
propagated.  The chi factor of the zeta functional equation is handled
entirely in log space so that large |t| cannot overflow.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

from .config import DEFAULT_CONFIG, EvalConfig
from .errors import AccuracyError, ConvergenceError, NonFiniteError, PoleError

LOG_2PI = math.log(2.0 * math.pi)

# Bernoulli numbers B_2, B_4, ..., B_30 as exact fractions.
_BERNOULLI = [
    Fraction(1, 6), Fraction(-1, 30), Fraction(1, 42), Fraction(-1, 30),
    Fraction(5, 66), Fraction(-691, 2730), Fraction(7, 6),
    Fraction(-3617, 510), Fraction(43867, 798), Fraction(-174611, 330),
    Fraction(854513, 138), Fraction(-236364091, 2730), Fraction(8553103, 6),
    Fraction(-23749461029, 870), Fraction(8615841276005, 14322),
]
BERNOULLI_2K = [float(b) for b in _BERNOULLI]

# Stirling series coefficients B_{2k} / (2k (2k-1)), k = 1..15.
_STIRLING = [float(b / (2 * k * (2 * k - 1))) for k, b in enumerate(_BERNOULLI, start=1)]

# B_{2k} / (2k)!, used by the Euler-Maclaurin tail of zeta.
_EM_COEFF = [float(b / math.factorial(2 * k)) for k, b in enumerate(_BERNOULLI, start=1)]


def _require_finite(s: complex, name: str = "s") -> complex:
    s = complex(s)
    if not (math.isfinite(s.real) and math.isfinite(s.imag)):
        raise NonFiniteError(f"{name} must be finite, got {s!r}")
    return s


def _is_nonpositive_integer(s: complex) -> bool:
    return s.imag == 0.0 and s.real <= 0.0 and s.real == math.floor(s.real)


def log_sin_pi(s: complex) -> complex:
    """log sin(pi s), stable for arbitrarily large |Im s|.

    The result may differ from the principal branch by a multiple of 2 pi i;
    its real part (log |sin pi s|) is always exact.
    """
    if s.imag < 0.0:
        return log_sin_pi(s.conjugate()).conjugate()
    # For Im s >= 0 the term e^{-i pi s} dominates:
    # sin(pi s) = e^{-i pi s} (e^{2 i pi s} - 1) / (2i),  |e^{2 i pi s}| <= 1.
    w = cmath.exp(2j * math.pi * s) - 1.0
    if w == 0:
        raise PoleError(f"sin(pi s) vanishes at s = {s!r}")
    return -1j * math.pi * s + cmath.log(w) - cmath.log(2j)


def log_cos(w: complex) -> complex:
    """log cos(w), stable for arbitrarily large |Im w| (same branch caveat)."""
    if w.imag < 0.0:
        return log_cos(w.conjugate()).conjugate()
    # cos w = e^{-i w} (1 + e^{2 i w}) / 2 with |e^{2 i w}| <= 1 for Im w >= 0.
    q = cmath.exp(2j * w)
    if q == -1.0:
        raise PoleError(f"cos(w) vanishes at w = {w!r}")
    return -1j * w - math.log(2.0) + cmath.log(1.0 + q)


def log_abs_cos(w: complex) -> float:
    """log |cos(w)| without overflow: |cos(x+iy)|^2 = cos^2 x + sinh^2 y."""
    x, y = w.real, abs(w.imag)
    # sinh^2(y) e^{-2y} = ((1 - e^{-2y}) / 2)^2, exactly.
    p = (1.0 - math.exp(-2.0 * y)) / 2.0
    c = math.cos(x)
    inner = c * c * math.exp(-2.0 * y) + p * p
    if inner == 0.0:
        raise PoleError(f"cos(w) vanishes at w = {w!r}")
    return y + 0.5 * math.log(inner)


def _stirling_log_gamma(z: complex, cfg: EvalConfig) -> complex:
    """Asymptotic Stirling series; caller guarantees |z| is large enough."""
    base = (z - 0.5) * cmath.log(z) - z + 0.5 * LOG_2PI
    zinv2 = 1.0 / (z * z)
    zpow = 1.0 / z
    total = 0j
    for k, coeff in enumerate(_STIRLING, start=1):
        term = coeff * zpow
        total += term
        if abs(term) < 0.1 * cfg.target_abs_err:
            break
        zpow *= zinv2
    return base + total


def log_gamma(s: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """Principal-branch-compatible log Gamma(s).

    Strategy: reflect if Re s < 0.5, then recurrence-shift until
    |s| >= cfg.stirling_shift_min_modulus, then the Stirling series.
    The imaginary part may deviate from the principal branch by 2 pi i
    multiples after reflection; the real part log|Gamma(s)| is always exact.
    """
    s = _require_finite(s)
    if _is_nonpositive_integer(s):
        raise PoleError(f"Gamma pole at s = {s!r}")
    if s.real < 0.5:
        # Gamma(s) Gamma(1-s) = pi / sin(pi s)
        return math.log(math.pi) - log_sin_pi(s) - log_gamma(1.0 - s, cfg)
    z = s
    shift = 0j
    while abs(z) < cfg.stirling_shift_min_modulus:
        shift += cmath.log(z)
        z += 1.0
    return _stirling_log_gamma(z, cfg) - shift


def re_digamma(sigma: float, t: float, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """Re psi(sigma + i t) = d/d sigma of log|Gamma(sigma + i t)|."""
    s = _require_finite(complex(sigma, t))
    if _is_nonpositive_integer(s):
        raise PoleError(f"digamma pole at s = {s!r}")
    z = s
    shift = 0.0
    while abs(z) < cfg.stirling_shift_min_modulus:
        # psi(z) = psi(z+1) - 1/z
        shift += (z / (z.real * z.real + z.imag * z.imag)).real  # Re(1/z)
        z += 1.0
    # psi(z) ~ log z - 1/(2z) - sum B_2k / (2k z^{2k})
    total = cmath.log(z) - 0.5 / z
    zinv2 = 1.0 / (z * z)
    zpow = zinv2
    for k, b2k in enumerate(BERNOULLI_2K, start=1):
        term = b2k / (2 * k) * zpow
        total -= term
        if abs(term) < 0.1 * cfg.target_abs_err:
            break
        zpow *= zinv2
    return total.real - shift


def chi_factor_log(s: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """A logarithm of g(s) = 2^{1-s} pi^{-s} cos(pi s / 2) Gamma(s).

    The real part is log|g(s)| exactly; the imaginary part is one valid
    argument of g(s) (branch not contractual).
    """
    s = _require_finite(s)
    return ((1.0 - s) * math.log(2.0) - s * math.log(math.pi)
            + log_cos(0.5 * math.pi * s) + log_gamma(s, cfg))


def chi_factor_log_modulus(s: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """log |g(s)|, computed entirely in log space (no overflow for large |t|)."""
    s = _require_finite(s)
    if _is_nonpositive_integer(s):
        raise PoleError(f"Gamma pole at s = {s!r}")
    return ((1.0 - s.real) * math.log(2.0) - s.real * math.log(math.pi)
            + log_abs_cos(0.5 * math.pi * s) + log_gamma(s, cfg).real)


def h_value(s: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """log |g(s) / g(1/2 + it)|.

    Since |g(1/2 + it)| = 1 this equals log|g(s)|; positivity for
    sigma > 1/2 certifies |zeta(1-s)| > |zeta(s)| away from zeros.
    """
    return chi_factor_log_modulus(s, cfg)


def _zeta_em(s: complex, n_sum: int, m_corr: int) -> tuple[complex, float]:
    """One Euler-Maclaurin evaluation; returns (value, truncation estimate).

    zeta(s) = sum_{n<N} n^{-s} + N^{1-s}/(s-1) + N^{-s}/2
              + sum_{k=1}^{M} B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{1-s-2k}
    """
    total = 0j
    for n in range(1, n_sum):
        total += cmath.exp(-s * math.log(n))
    npow = cmath.exp(-s * math.log(n_sum))  # N^{-s}
    total += npow * n_sum / (s - 1.0) + 0.5 * npow
    ninv2 = 1.0 / (n_sum * n_sum)
    rising = s                     # s (s+1) ... (s+2k-2)
    factor = npow / n_sum          # N^{-s-1}, then N^{-s-3}, ...
    last = 0.0
    for k in range(1, m_corr + 1):
        term = _EM_COEFF[k - 1] * rising * factor
        total += term
        last = abs(term)
        rising *= (s + (2 * k - 1)) * (s + 2 * k)
        factor *= ninv2
    # first omitted term as the error proxy (alternating-style tail)
    est = abs(_EM_COEFF[m_corr] * rising * factor) if m_corr < len(_EM_COEFF) else last
    return total, est


def zeta(s: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """Riemann zeta by Euler-Maclaurin summation, valid on C \\ {1}.

    Accurate to cfg.target_abs_err for the |t| <= ~100 range this package
    works in; raises AccuracyError if the truncation estimate will not meet
    the target.
    """
    s = _require_finite(s)
    if s == 1.0:
        raise PoleError("zeta pole at s = 1")
    n_sum = max(cfg.em_cutoff_n, int(math.ceil(2.0 * abs(s.imag))))
    for _ in range(8):
        value, est = _zeta_em(s, n_sum, cfg.em_correction_terms)
        if est <= cfg.target_abs_err:
            return value
        n_sum *= 2
    raise AccuracyError(
        f"zeta({s!r}): truncation estimate {est:.3e} exceeds target "
        f"{cfg.target_abs_err:.3e}")


def upper_incomplete_gamma(a: complex, x: float,
                           cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """Gamma(a, x) for complex a and real x > 0.

    Continued fraction for x >= |a| + 1; otherwise the lower-incomplete
    series plus the complement Gamma(a) - gamma(a, x).
    """
    a = _require_finite(a, "a")
    if not (x > 0 and math.isfinite(x)):
        raise NonFiniteError(f"x must be finite and positive, got {x!r}")
    prefactor = cmath.exp(-x + a * math.log(x))  # e^{-x} x^a
    max_iter = 10_000
    if x >= abs(a) + 1.0:
        # Lentz's method on Gamma(a,x) = e^{-x} x^a / (x+1-a - 1(1-a)/(x+3-a - ...))
        tiny = 1e-300
        b = x + 1.0 - a
        c = 1.0 / tiny
        d = 1.0 / b
        f = d
        for i in range(1, max_iter):
            an = -i * (i - a)
            b += 2.0
            d = an * d + b
            if abs(d) < tiny:
                d = tiny
            c = b + an / c
            if abs(c) < tiny:
                c = tiny
            d = 1.0 / d
            delta = d * c
            f *= delta
            if abs(delta - 1.0) < 1e-16:
                return prefactor * f
        raise ConvergenceError(f"continued fraction stalled for Gamma({a!r}, {x})")
    # gamma(a,x) = e^{-x} x^a sum_{n>=0} x^n / (a (a+1) ... (a+n))
    term = 1.0 / a
    total = term
    for n in range(1, max_iter):
        term *= x / (a + n)
        total += term
        if abs(term) < 1e-17 * abs(total):
            gamma_lower = prefactor * total
            return cmath.exp(log_gamma(a, cfg)) - gamma_lower
    raise ConvergenceError(f"series stalled for Gamma({a!r}, {x})")
