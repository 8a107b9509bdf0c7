"""Exact modular arithmetic and primality for moduli below 2**64.

Python integers are unbounded, so the scalar routines never overflow; the
``Modulus`` bound only mirrors the 64-bit contract.  ``batch_pow_mod`` is the
vectorised path used by the survey scanner: it works on int64 numpy arrays
and splits products into 20-bit limbs once the modulus exceeds 2**31.
"""

from __future__ import annotations

import math
import random
from functools import lru_cache

import numpy as np

from .errors import FactorizationError, NotPrime

U64_MAX = 2**64 - 1

# Deterministic for n < 3.3e24 (Sorenson & Webster), hence all of u64.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

TRIAL_DIVISION_LIMIT = 10**6
_RHO_MAX_ITER = 1 << 22


def _check_modulus(m: int) -> int:
    if not 2 <= m <= U64_MAX:
        raise ValueError(f"modulus must lie in [2, 2^64), got {m}")
    return m


def mul_mod(a: int, b: int, m: int) -> int:
    _check_modulus(m)
    return (a % m) * (b % m) % m


def pow_mod(b: int, e: int, m: int) -> int:
    if e < 0:
        raise ValueError("exponent must be non-negative")
    if m == 1:
        return 0
    _check_modulus(m)
    return pow(b % m, e, m)


def is_prime_u64(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every n < 2**64."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int, rng: random.Random) -> int:
    """Return a non-trivial factor of the odd composite n."""
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        iters = 0
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
            iters += r
            if iters > _RHO_MAX_ITER:
                raise FactorizationError(f"rho did not split {n}")
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending.

    Trial division up to ``TRIAL_DIVISION_LIMIT``, then Brent's rho on the
    cofactor.  Raises FactorizationError instead of looping forever.
    """
    if not 1 <= n <= U64_MAX:
        raise ValueError("n must lie in [1, 2^64)")
    factors: set[int] = set()
    for p in (2, 3, 5):
        if n % p == 0:
            factors.add(p)
            while n % p == 0:
                n //= p
    # 6k +- 1 wheel
    d, step = 7, 4
    while d * d <= n and d <= TRIAL_DIVISION_LIMIT:
        if n % d == 0:
            factors.add(d)
            while n % d == 0:
                n //= d
        d += step
        step = 6 - step
    if n > 1:
        rng = random.Random(n)
        stack = [n]
        while stack:
            c = stack.pop()
            if c == 1:
                continue
            if is_prime_u64(c):
                factors.add(c)
                continue
            s = math.isqrt(c)
            if s * s == c:
                stack += [s, s]
                continue
            g = _pollard_brent(c, rng)
            stack += [g, c // g]
    return sorted(factors)


@lru_cache(maxsize=4096)
def primitive_root(f: int) -> int:
    """Least generator of (Z/fZ)^* for prime f; 1 for the trivial group f=2."""
    if f == 2:
        return 1
    if not is_prime_u64(f):
        raise NotPrime(f"{f} is not prime")
    cofactors = [(f - 1) // p for p in prime_factors(f - 1)]
    g = 2
    while True:
        if all(pow(g, c, f) != 1 for c in cofactors):
            return g
        g += 1


# --- vectorised exponentiation -------------------------------------------

_DIRECT_LIMIT = 3_037_000_499  # floor(sqrt(2**63 - 1))
BATCH_MODULUS_LIMIT = 2**40
_LIMB = 20
_LIMB_MASK = (1 << _LIMB) - 1


def _batch_mul_mod(a: np.ndarray, b: np.ndarray, m: np.ndarray, direct: bool) -> np.ndarray:
    if direct:
        return (a * b) % m
    # a, b < m <= 2**40: every partial product stays below 2**60
    hi = ((a * (b >> _LIMB)) % m) << _LIMB
    return ((hi % m) + (a * (b & _LIMB_MASK)) % m) % m


def batch_pow_mod(base: np.ndarray, exp: np.ndarray, mod: np.ndarray) -> np.ndarray:
    """Elementwise base**exp % mod over int64 arrays with mod <= 2**40."""
    base = np.asarray(base, dtype=np.int64)
    exp = np.asarray(exp, dtype=np.int64)
    mod = np.asarray(mod, dtype=np.int64)
    if mod.size == 0:
        return np.zeros(0, dtype=np.int64)
    mmax = int(mod.max())
    if mmax > BATCH_MODULUS_LIMIT or int(mod.min()) < 2:
        raise ValueError("batch_pow_mod needs moduli in [2, 2^40]")
    if int(exp.min()) < 0:
        raise ValueError("exponents must be non-negative")
    direct = mmax <= _DIRECT_LIMIT
    result = np.ones_like(mod)
    b = base % mod
    e = exp.copy()
    for _ in range(int(e.max()).bit_length()):
        odd = (e & 1).astype(bool)
        if odd.any():
            result = np.where(odd, _batch_mul_mod(result, b, mod, direct), result)
        e >>= 1
        b = _batch_mul_mod(b, b, mod, direct)
    return result
