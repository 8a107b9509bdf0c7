"""Least inert primes q1 < q2 and the auxiliary integer r.

A prime q is inert in the degree-ell field of conductor f exactly when
chi(q) is a non-trivial root of unity; the ramified prime q = f (chi(q) = 0)
is skipped.
"""

from __future__ import annotations

import logging
import math
from dataclasses import asdict, dataclass
from typing import Iterator

from .characters import OrderEllCharacter
from .errors import SearchExhausted
from .sieve import primes_up_to

log = logging.getLogger(__name__)

PRIME_CAP = 10**6
R_CAP = 10**7

_SMALL_PRIMES = tuple(primes_up_to(1000).tolist())


@dataclass(frozen=True)
class NonResidueData:
    q1: int
    q2: int
    omega_exponent: int
    r: int

    def to_dict(self) -> dict:
        return asdict(self)


def iter_primes(cap: int = PRIME_CAP) -> Iterator[int]:
    """Primes below cap, ascending; the table below 1000 covers the usual case."""
    for p in _SMALL_PRIMES:
        if p >= cap:
            return
        yield p
    if cap > 1000:
        for p in primes_up_to(cap - 1).tolist():
            if p > 1000:
                yield p


def _is_inert(chi: OrderEllCharacter, q: int) -> bool:
    j = chi.exponent(q)
    return j is not None and j != 0


def find_q1(chi: OrderEllCharacter, cap: int = PRIME_CAP) -> int:
    for q in iter_primes(cap):
        if _is_inert(chi, q):
            return q
    raise SearchExhausted(f"no inert prime below {cap} for f={chi.f}")


def find_q2(chi: OrderEllCharacter, q1: int, cap: int = PRIME_CAP) -> int:
    for q in iter_primes(cap):
        if q > q1 and _is_inert(chi, q):
            return q
    raise SearchExhausted(f"no second inert prime below {cap} for f={chi.f}")


def find_r(chi: OrderEllCharacter, q1: int, q2: int, cap: int = R_CAP) -> tuple[int, int]:
    """Least r >= 1 with gcd(r, q1*q2) = 1 and chi(r) = chi(q2)**-1.

    Returns (r, omega_exponent) where omega_exponent is the exponent of
    chi(q2)**-1.
    """
    j2 = chi.exponent(q2)
    if j2 is None or j2 == 0:
        raise ValueError(f"chi({q2}) must be a non-trivial root of unity")
    ell = chi.ell
    omega = (ell - j2) % ell
    q12 = q1 * q2
    for r in range(1, min(chi.f, cap)):
        if math.gcd(r, q12) == 1 and chi.exponent(r) == omega:
            return r, omega
    raise SearchExhausted(f"no admissible r below {min(chi.f, cap)} for f={chi.f}")


def grh_findings(chi: OrderEllCharacter, data: NonResidueData) -> list[str]:
    """Compare (q1, q2, r) against the GRH bounds where those bounds apply.

    A non-empty result would contradict GRH; each finding is also logged.
    """
    from .bounds import bach_q1_bound, q2_bound, r_bound

    f, ell = chi.f, chi.ell
    findings = []
    if f >= 10**8 and data.q1 >= bach_q1_bound(f):
        findings.append(f"q1={data.q1} >= Bach bound {bach_q1_bound(f):.3f} at f={f}")
    if f >= 10**9 and data.q2 >= q2_bound(f):
        findings.append(f"q2={data.q2} >= 2.5(log f)^2 = {q2_bound(f):.3f} at f={f}")
    if f >= 10**8 and data.r >= r_bound(ell, f):
        findings.append(f"r={data.r} >= 2.5(l-1)^2(log f)^2 = {r_bound(ell, f):.3f} at f={f}")
    for msg in findings:
        log.warning("GRH bound violated: %s", msg)
    return findings


def nonresidue_data(chi: OrderEllCharacter, prime_cap: int = PRIME_CAP, r_cap: int = R_CAP) -> NonResidueData:
    q1 = find_q1(chi, prime_cap)
    q2 = find_q2(chi, q1, prime_cap)
    r, omega = find_r(chi, q1, q2, r_cap)
    # post-hoc: chi(r * q2) must be trivial
    if chi.exponent(r * q2 % chi.f) != 0:
        raise AssertionError(f"chi(r*q2) != 1 for f={chi.f}, r={r}, q2={q2}")
    data = NonResidueData(q1, q2, omega, r)
    grh_findings(chi, data)
    return data
