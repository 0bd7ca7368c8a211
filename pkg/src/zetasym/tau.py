"""Exact Ramanujan tau coefficients and the Dirichlet series F(s).

tau(n) is generated from the eta-product definition of the weight-12 cusp
form: coefficients of q * prod(1-q^n)^24.  Everything integer-side is exact;
polynomial powers use Kronecker substitution (pack coefficients into one big
integer) so the 24th power at n_max = 10^6 stays fast.

F(s) = sum tau(n) n^{-s} converges absolutely only for sigma > 13/2; inside
the strip it is evaluated through the completed function
Lambda(s) = (2 pi)^{-s} Gamma(s) F(s), which has an absolutely convergent
two-sided incomplete-gamma expansion from the modular transform of Delta.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .config import DEFAULT_CONFIG, EvalConfig
from .errors import DomainError, OverflowAbort
from .specfun import log_gamma, upper_incomplete_gamma

INT128_MAX = 2**127 - 1
TWO_PI = 2.0 * math.pi
EULER_GAMMA = 0.5772156649015329


@dataclass(frozen=True)
class TauTable:
    """Exact tau(1..n_max); coeffs[n] = tau(n), coeffs[0] unused."""

    n_max: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n_max < 1 or len(self.coeffs) != self.n_max + 1:
            raise DomainError("TauTable length must be n_max + 1")
        if self.coeffs[1] != 1:
            raise DomainError("tau(1) must be 1")

    def tau(self, n: int) -> int:
        if not 1 <= n <= self.n_max:
            raise DomainError(f"n = {n} outside table range 1..{self.n_max}")
        return self.coeffs[n]


def euler_coeffs(n_max: int) -> list[int]:
    """Coefficients of prod_{n>=1} (1 - q^n) through degree n_max.

    Pentagonal number theorem: (-1)^k at the generalized pentagonal
    exponents k(3k-1)/2 for k in Z, zero elsewhere.
    """
    if n_max < 1:
        raise DomainError("n_max must be >= 1")
    out = [0] * (n_max + 1)
    out[0] = 1
    k = 1
    while k * (3 * k - 1) // 2 <= n_max:
        sign = -1 if k % 2 else 1
        for g in (k * (3 * k - 1) // 2, k * (3 * k + 1) // 2):
            if g <= n_max:
                out[g] = sign
        k += 1
    return out


def _poly_mul_trunc(a: list[int], b: list[int], n_max: int) -> list[int]:
    """Exact truncated product of integer polynomials via Kronecker packing."""
    bound = min(len(a), len(b)) * max(map(abs, a), default=1) * max(map(abs, b), default=1)
    nbytes = (bound.bit_length() + 2 + 7) // 8 + 1
    bits = 8 * nbytes
    base = 1 << bits
    half = base >> 1

    def pack(p: list[int]) -> int:
        # offset each slot by half so negative coefficients pack as plain bytes
        buf = b"".join((c + half).to_bytes(nbytes, "little") for c in p)
        return int.from_bytes(buf, "little") - half * ((base**len(p) - 1) // (base - 1))

    prod = pack(a) * pack(b)
    # Shift every balanced digit into [0, base) so the product is nonnegative
    # and slots can be sliced out of the byte representation without borrows.
    n_slots = n_max + 1
    mask = (1 << (bits * n_slots)) - 1
    offset = half * (mask // (base - 1))
    raw = ((prod & mask) + offset).to_bytes(n_slots * nbytes + 1, "little")
    return [int.from_bytes(raw[k * nbytes:(k + 1) * nbytes], "little") - half
            for k in range(n_slots)]


def tau_table(n_max: int) -> TauTable:
    """Delta's q-expansion: E(q)^24 by binary exponentiation, shifted by one.

    Aborts with OverflowAbort if any tau value leaves signed 128-bit range
    (cannot happen below n_max ~ 10^6 by the Deligne size bound, but the
    contract is checked, not assumed).
    """
    if n_max < 1:
        raise DomainError("n_max must be >= 1")
    deg = n_max - 1  # tau(n) is the coefficient of q^{n-1} in E^24
    e = euler_coeffs(max(deg, 1))[: deg + 1]
    e2 = _poly_mul_trunc(e, e, deg)
    e4 = _poly_mul_trunc(e2, e2, deg)
    e8 = _poly_mul_trunc(e4, e4, deg)
    e16 = _poly_mul_trunc(e8, e8, deg)
    e24 = _poly_mul_trunc(e16, e8, deg)
    coeffs = [0] + e24
    for n, c in enumerate(coeffs[1:], start=1):
        if abs(c) > INT128_MAX:
            raise OverflowAbort(f"tau({n}) exceeds signed 128-bit range")
    return TauTable(n_max=n_max, coeffs=tuple(coeffs))


def divisor_counts(n_max: int) -> list[int]:
    """d(n) for 1 <= n <= n_max by sieve; index 0 unused."""
    d = [0] * (n_max + 1)
    for i in range(1, n_max + 1):
        for j in range(i, n_max + 1, i):
            d[j] += 1
    return d


def f_partial(s: complex, table: TauTable, n_terms: int) -> tuple[complex, float]:
    """Partial sum of F(s) over n <= n_terms, plus a tail estimate.

    The tail uses |tau(n)| <= d(n) n^{11/2} and the integral comparison
    sum_{n>N} d(n) n^{-a} <~ int_N^inf (ln x + 2 gamma + 1) x^{-a} dx
    with a = sigma - 11/2; only valid for sigma > 13/2.
    """
    s = complex(s)
    if n_terms < 1 or n_terms > table.n_max:
        raise DomainError(f"n_terms must be in 1..{table.n_max}")
    if s.real <= 6.5:
        raise DomainError("partial sums carry no tail bound for sigma <= 13/2")
    total = 0j
    for n in range(1, n_terms + 1):
        total += table.coeffs[n] * cmath.exp(-s * math.log(n))
    a = s.real - 5.5
    ln_n = math.log(n_terms)
    tail = (n_terms ** (1.0 - a) / (a - 1.0)) * (ln_n + 2.0 * EULER_GAMMA + 1.0 + 1.0 / (a - 1.0))
    return total, tail


def lambda_completed(s: complex, table: TauTable,
                     cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """Completed function of Delta via the two-sided incomplete-gamma series.

    Lambda(s) = sum_n tau(n) [ (2 pi n)^{-s} Gamma(s, 2 pi n)
                             + (2 pi n)^{s-12} Gamma(12-s, 2 pi n) ],
    absolutely convergent for all s and symmetric under s -> 12 - s by
    construction.  Terms shrink like e^{-2 pi n}; a dozen suffice.
    """
    s = complex(s)
    n_cut = min(table.n_max, cfg.series_nmax)
    total = 0j
    for n in range(1, n_cut + 1):
        x = TWO_PI * n
        lx = math.log(x)
        term = (cmath.exp(-s * lx) * upper_incomplete_gamma(s, x, cfg)
                + cmath.exp((s - 12.0) * lx) * upper_incomplete_gamma(12.0 - s, x, cfg))
        term *= table.coeffs[n]
        total += term
        # Deligne-sized envelope on what remains
        if n >= 8 and (n + 1) ** 6.5 * math.exp(-TWO_PI * (n + 1)) < 0.01 * cfg.target_abs_err:
            break
    return total


def f_value(s: complex, table: TauTable,
            cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """F(s) continued to the whole plane: Lambda(s) (2 pi)^s / Gamma(s)."""
    s = complex(s)
    lam = lambda_completed(s, table, cfg)
    return lam * cmath.exp(s * math.log(TWO_PI) - log_gamma(s, cfg))


def check_table(table: TauTable) -> None:
    """Raise DomainError on the first violated tau-table invariant.

    Checks multiplicativity tau(mn) = tau(m) tau(n) for coprime m, n, the
    Hecke recurrence at prime powers, and the Deligne size bound
    |tau(n)| <= d(n) n^{11/2}, each exhaustively over the table.
    """
    n_max = table.n_max
    c = table.coeffs
    for m in range(2, int(math.isqrt(n_max)) + 1):
        for n in range(m + 1, n_max // m + 1):
            if math.gcd(m, n) == 1 and c[m * n] != c[m] * c[n]:
                raise DomainError(f"multiplicativity fails at ({m}, {n})")
    sieve = _primes_up_to(n_max)
    for p in sieve:
        pk = p * p  # p^{k+1} for k >= 1
        prev, cur = c[1], c[p]
        while pk <= n_max:
            expected = c[p] * cur - p**11 * prev
            if c[pk] != expected:
                raise DomainError(f"Hecke recurrence fails at {p}^{round(math.log(pk, p))}")
            prev, cur = cur, expected
            pk *= p
    d = divisor_counts(n_max)
    for n in range(1, n_max + 1):
        if abs(c[n]) > d[n] * n**5.5 * (1 + 1e-12):
            raise DomainError(f"Deligne size bound fails at n = {n}")


def _primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, int(math.isqrt(n)) + 1):
        if sieve[p]:
            sieve[p * p:: p] = bytearray(len(sieve[p * p:: p]))
    return [i for i, v in enumerate(sieve) if v]
