"""Sieve of Eratosthenes, plain and segmented, on numpy boolean arrays."""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from .errors import RangeError

SIEVE_CEILING = 10**12
MAX_SEGMENT = 1 << 26


def primes_up_to(n: int) -> np.ndarray:
    """All primes p <= n as an int64 array."""
    if n < 2:
        return np.zeros(0, dtype=np.int64)
    return _primes_up_to(int(n))


@lru_cache(maxsize=8)
def _primes_up_to(n: int) -> np.ndarray:
    is_p = np.ones(n + 1, dtype=bool)
    is_p[:2] = False
    is_p[4::2] = False
    for p in range(3, math.isqrt(n) + 1, 2):
        if is_p[p]:
            is_p[p * p :: 2 * p] = False
    out = np.flatnonzero(is_p).astype(np.int64)
    out.flags.writeable = False
    return out


def _base_primes(hi: int) -> np.ndarray:
    # round the cache key up so neighbouring segments share one table
    limit = math.isqrt(max(hi - 1, 0))
    key = 1 << max(limit, 1).bit_length()
    return primes_up_to(min(key, math.isqrt(SIEVE_CEILING)))


def primes_in_segment(lo: int, hi: int) -> np.ndarray:
    """Primes in [lo, hi), ascending."""
    if lo < 0 or hi < lo:
        raise RangeError(f"bad interval [{lo}, {hi})")
    if hi > SIEVE_CEILING:
        raise RangeError(f"hi={hi} exceeds the sieve ceiling {SIEVE_CEILING}")
    if hi - lo > MAX_SEGMENT:
        raise RangeError(f"segment length {hi - lo} exceeds {MAX_SEGMENT}")
    if hi <= 2:
        return np.zeros(0, dtype=np.int64)
    lo = max(lo, 2)
    seg = np.ones(hi - lo, dtype=bool)
    root = math.isqrt(hi - 1)
    for p in _base_primes(hi).tolist():
        if p > root:
            break
        start = max(p * p, -(-lo // p) * p)
        if start < hi:
            seg[start - lo :: p] = False
    return np.flatnonzero(seg).astype(np.int64) + lo
