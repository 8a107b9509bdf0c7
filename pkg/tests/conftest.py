import math
import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", max_examples=100, deadline=None)
settings.register_profile("ci", max_examples=300, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


# --- independent brute-force oracles (no normeuclid code) -----------------------


def trial_is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def simple_sieve(n: int) -> list[int]:
    """All primes < n, plain Eratosthenes on a bytearray."""
    if n < 3:
        return []
    mark = bytearray([1]) * n
    mark[0] = mark[1] = 0
    for p in range(2, int(n**0.5) + 1):
        if mark[p]:
            mark[p * p::p] = bytearray(len(range(p * p, n, p)))
    return [i for i in range(n) if mark[i]]


def power_residues(ell: int, f: int) -> set[int]:
    """{x^ell mod f : 1 <= x < f} by direct enumeration."""
    return {pow(x, ell, f) for x in range(1, f)}


def brute_nonresidue(ell: int, f: int) -> tuple[int, int, int]:
    """(q1, q2, r) from the residue set alone, no character tables.

    chi(a) = chi(b) iff a/b is an ell-th power, so chi(r) = chi(q2)^-1
    iff r*q2 is a residue.
    """
    res = power_residues(ell, f)
    inert = [q for q in simple_sieve(10**4) if q % f and q % f not in res]
    q1, q2 = inert[0], inert[1]
    r = 1
    while True:
        if math.gcd(r, q1 * q2) == 1 and r % f and (r * q2) % f in res:
            return q1, q2, r
        r += 1


def von_mangoldt(n: int) -> float:
    if n < 2:
        return 0.0
    for p in range(2, n + 1):
        if n % p == 0:
            m = n
            while m % p == 0:
                m //= p
            return math.log(p) if m == 1 else 0.0
    return 0.0


# --- acceptance summary -----------------------------------------------------------

ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


@pytest.fixture
def criterion():
    def record(num: int, title: str, ok: bool, detail: str = "") -> None:
        ACCEPTANCE[num] = (title, bool(ok), detail)
        line = f"criterion {num} [{title}]: {'PASS' if ok else 'FAIL'}" + (f" ({detail})" if detail else "")
        print(line)
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        title, ok, detail = ACCEPTANCE[num]
        terminalreporter.write_line(
            f"criterion {num} [{title}]: {'PASS' if ok else 'FAIL'}" + (f" ({detail})" if detail else ""))
