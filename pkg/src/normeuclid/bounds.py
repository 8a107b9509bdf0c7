"""Closed-form analytic quantities: special-function constants, GRH bounds
for q1, q2 and r, right-hand sides of the zero-sum estimates, and the
derivation of the conditional conductor bounds C_ell.

All logarithms are natural.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from functools import lru_cache
from typing import Callable, Optional

from .errors import DomainError, RangeError
from .modmath import prime_factors

EULER_GAMMA = 0.57721566490153286061

# B_2, B_4, ..., B_14
_BERNOULLI = (1 / 6, -1 / 30, 1 / 42, -1 / 30, 5 / 66, -691 / 2730, 7 / 6)


def digamma(x: float) -> float:
    """psi(x) = Gamma'(x)/Gamma(x) for real x > 0, absolute error < 1e-12."""
    if not x > 0:
        raise DomainError(f"digamma needs x > 0, got {x}")
    shift = 0.0
    while x < 8.0:
        shift -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    # asymptotic tail: sum_k B_2k / (2k x^2k)
    tail = 0.0
    p = inv2
    for k, b in enumerate(_BERNOULLI, start=1):
        tail += b / (2 * k) * p
        p *= inv2
    return shift + math.log(x) - 0.5 / x - tail


def psi_Q(s: float) -> float:
    """Gamma-factor logarithmic derivative for Q: (psi(s/2) - log pi) / 2."""
    if not s > 0:
        raise DomainError(f"psi_Q needs s > 0, got {s}")
    return 0.5 * (digamma(s / 2) - math.log(math.pi))


def _dlogn_over_ns(m: int, s: float, t: float) -> float:
    """m-th derivative in t of log(t) * t**-s."""
    rising = 1.0
    rising_ds = 0.0
    for i in range(m):
        rising_ds = rising_ds * (s + i) + rising
        rising *= s + i
    return (-1) ** m * t ** (-s - m) * (rising * math.log(t) - rising_ds)


@lru_cache(maxsize=1)
def zeta_log_deriv_at_2() -> float:
    """zeta'(2)/zeta(2) = -sum Lambda(n)/n^2, about -0.569961.

    zeta'(2) = -sum log(n)/n^2 is summed directly to N = 64 and the tail is
    closed by Euler-Maclaurin with terms through B_14 (error far below 1e-12).
    """
    n_cut = 64
    s = 2.0
    head = math.fsum(math.log(n) / n**2 for n in range(2, n_cut))
    t = float(n_cut)
    tail = (math.log(t) + 1.0) / t + 0.5 * math.log(t) / t**2
    for k, b in enumerate(_BERNOULLI, start=1):
        tail -= b / math.factorial(2 * k) * _dlogn_over_ns(2 * k - 1, s, t)
    zeta_prime_2 = -(head + tail)
    return zeta_prime_2 / (math.pi**2 / 6)


@dataclass(frozen=True)
class AnalyticConstants:
    psiQ_3_2: float
    zeta_log_deriv_2: float
    gamma_euler: float

    def to_dict(self) -> dict:
        return asdict(self)


@lru_cache(maxsize=1)
def analytic_constants() -> AnalyticConstants:
    c = AnalyticConstants(psi_Q(1.5), zeta_log_deriv_at_2(), EULER_GAMMA)
    assert -1.1154 < c.psiQ_3_2 < -1.1152
    assert -0.5700 < c.zeta_log_deriv_2 < -0.5699
    return c


# --- GRH bounds on the non-residues --------------------------------------


def bach_q1_bound(m: float) -> float:
    """(1.17 log m - 6.36)^2, valid for m >= 1e8."""
    if m < 1e8:
        raise DomainError(f"Bach's bound needs m >= 1e8, got {m}")
    return (1.17 * math.log(m) - 6.36) ** 2


def q2_bound(m: float) -> float:
    if m < 1e9:
        raise DomainError(f"q2 bound needs m >= 1e9, got {m}")
    return 2.5 * math.log(m) ** 2


def r_bound(ell: int, f: float) -> float:
    if f < 1e8:
        raise DomainError(f"r bound needs f >= 1e8, got {f}")
    if ell < 3 or ell % 2 == 0:
        raise DomainError(f"ell must be an odd prime, got {ell}")
    return 2.5 * (ell - 1) ** 2 * math.log(f) ** 2


# --- right-hand sides of the zero-sum bounds ------------------------------


def _check_a(a: float) -> None:
    if not 0 < a < 1:
        raise DomainError(f"a must lie in (0, 1), got {a}")


def zero_sum_bound_chi(f: float, a: float) -> float:
    """Bound on sum over zeros of zeta and L(s, chi) of 1/|rho + a|^2."""
    _check_a(a)
    if not f > 1:
        raise DomainError(f"f must exceed 1, got {f}")
    return (math.log(f) + 2 * (1 / (a + 1) + 1 / a) + 4 * psi_Q(a + 1)) / (2 * a + 1)


def zero_sum_bound_chi_rounded(f: float) -> float:
    """The a = 1/2 case with the published constant 0.437."""
    return 0.5 * math.log(f) + 0.437


def zero_sum_bound_K(ell: int, f: float, a: float) -> float:
    """Bound on sum over zeros of zeta_K of 1/|rho + a|^2.

    K is totally real of degree ell with discriminant f**(ell-1), so
    psi_K = ell * psi_Q.
    """
    _check_a(a)
    if ell < 3 or ell % 2 == 0:
        raise DomainError(f"ell must be an odd prime, got {ell}")
    if not f > 1:
        raise DomainError(f"f must exceed 1, got {f}")
    log_disc = (ell - 1) * math.log(f)
    return (log_disc + 2 * (1 / (a + 1) + 1 / a) + 2 * ell * psi_Q(a + 1)) / (2 * a + 1)


def zero_sum_bound_K_rounded(ell: int, f: float) -> float:
    """0.5 * ((ell-1) log f - 2.23 ell + 5.34), the published a = 1/2 form."""
    return 0.5 * ((ell - 1) * math.log(f) - 2.23 * ell + 5.34)


def lambda_excluded_sum(x: float, u: int, a: float) -> float:
    """sum over n < x with gcd(n, u) > 1 of Lambda(n) (n/x)^a log(x/n).

    Only prime powers of primes dividing u contribute, so they are
    enumerated directly.
    """
    if not x > 1:
        raise DomainError(f"x must exceed 1, got {x}")
    if x > 1e7:
        raise RangeError(f"x={x} beyond the brute-force range 1e7")
    if u < 1:
        raise DomainError(f"u must be a positive integer, got {u}")
    _check_a(a)
    terms = []
    for p in prime_factors(u) if u > 1 else []:
        lp = math.log(p)
        n = p
        while n < x:
            terms.append(lp * (n / x) ** a * math.log(x / n))
            n *= p
    return math.fsum(terms)


def omega(u: int) -> int:
    """Number of distinct prime factors."""
    return 0 if u == 1 else len(prime_factors(u))


# --- the C_ell table -------------------------------------------------------

# Published conditional conductor bounds, as exponents of ten.
TABLE2 = {
    3: 11, 5: 12, 7: 13, 11: 13, 13: 14, 17: 14, 19: 14, 23: 14,
    29: 15, 31: 15, 37: 15, 41: 15, 43: 15, 47: 15, 53: 15, 59: 15,
    61: 15, 67: 15, 71: 16, 73: 16, 79: 16, 83: 16, 89: 16, 97: 16,
}

_SCAN_MAX_EXP = 40


@dataclass(frozen=True)
class Crossover:
    exponent: int  # least k with the inequality true for all f >= 10**k
    threshold_log10: float  # bisected location of the last sign change
    verified: bool


@dataclass(frozen=True)
class BoundReport:
    ell: int
    crossover_theorem5: int
    crossover_ugly: int
    table2_value: Optional[int]
    match_flag: str  # "theorem5", "ugly", "both" or "neither"
    threshold_theorem5: float
    threshold_ugly: float
    verified: bool

    @property
    def min_crossover(self) -> int:
        return min(self.crossover_theorem5, self.crossover_ugly)

    @property
    def finding(self) -> Optional[str]:
        if self.table2_value is None or self.min_crossover == self.table2_value:
            return None
        return (
            f"ell={self.ell}: min crossover 10^{self.min_crossover} differs from "
            f"table value 10^{self.table2_value} (match: {self.match_flag})"
        )

    def to_dict(self) -> dict:
        return asdict(self)


def _safe(holds: Callable[[float], bool]) -> Callable[[float], bool]:
    def inner(f: float) -> bool:
        try:
            return holds(f)
        except DomainError:
            return False

    return inner


def find_crossover(holds: Callable[[float], bool]) -> Crossover:
    """Least power of ten above which ``holds`` stays true.

    Coarse scan over 10**k, bisection in log space across the last sign
    change, then a 100-point monotonicity scan over [P, 100 P].
    """
    holds = _safe(holds)
    flags = [holds(10.0**k) for k in range(_SCAN_MAX_EXP + 1)]
    if not flags[-1]:
        raise DomainError(f"inequality still false at 1e{_SCAN_MAX_EXP}")
    k_false = max((k for k, ok in enumerate(flags) if not ok), default=-1)
    lo, hi = float(k_false), float(k_false + 1)
    if k_false >= 0:
        for _ in range(60):
            mid = 0.5 * (lo + hi)
            if holds(10.0**mid):
                hi = mid
            else:
                lo = mid
    exponent = math.ceil(hi - 1e-12)
    P = 10.0**exponent
    verified = holds(P) and holds(10 * P) and (exponent == 0 or not holds(P / 10))
    verified = verified and all(holds(P * 10 ** (2 * i / 99)) for i in range(100))
    return Crossover(exponent, hi, verified)


def derive_C_table(ell_list=None) -> list[BoundReport]:
    from .exclusion import theorem5_check, ugly_condition_check

    reports = []
    for ell in ell_list if ell_list is not None else sorted(TABLE2):
        if ell < 3 or ell % 2 == 0 or ell >= 100:
            raise DomainError(f"ell must be an odd prime below 100, got {ell}")
        t5 = find_crossover(lambda f: theorem5_check(ell, f))
        ug = find_crossover(lambda f: ugly_condition_check(ell, f))
        table = TABLE2.get(ell)
        hits = [name for name, c in (("theorem5", t5), ("ugly", ug)) if c.exponent == table]
        flag = {0: "neither", 1: hits[0] if hits else "neither", 2: "both"}[len(hits)]
        reports.append(
            BoundReport(ell, t5.exponent, ug.exponent, table, flag,
                        t5.threshold_log10, ug.threshold_log10, t5.verified and ug.verified)
        )
    return reports
