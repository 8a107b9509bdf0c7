import random

import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import simple_sieve, trial_is_prime
from normeuclid.errors import NotPrime
from normeuclid.modmath import (
    batch_pow_mod,
    is_prime_u64,
    mul_mod,
    pow_mod,
    prime_factors,
    primitive_root,
)

M61 = 2**61 - 1


def test_mul_mod_examples():
    assert mul_mod(0, 12345, 97) == 0
    assert mul_mod(6, 5, 7) == 2
    a = 10**18 % M61
    assert mul_mod(a, a, M61) == (a * a) % M61


def test_mul_mod_random_against_bigint():
    rng = random.Random(20240601)
    for _ in range(10**5):
        m = rng.randrange(2, 2**64)
        a, b = rng.randrange(m), rng.randrange(m)
        assert mul_mod(a, b, m) == (a * b) % m


@pytest.mark.parametrize("m", [1, 0, 2**64])
def test_bad_modulus(m):
    with pytest.raises(ValueError):
        mul_mod(1, 1, m)


def test_pow_mod_examples():
    assert pow_mod(2, (7 - 1) // 3, 7) == 4
    assert pow_mod(2, 10, 31) == 1
    for x in (0, 1, 5, 10**12):
        assert pow_mod(x % 97, 0, 97) == 1


def test_pow_mod_matches_repeated_multiplication():
    for m in (7, 31, 1000003):
        for b in (2, 3, m - 1):
            acc = 1
            for e in range(60):
                assert pow_mod(b, e, m) == acc
                acc = acc * b % m


@given(st.integers(2, 2**64 - 1), st.integers(0, 2**64 - 1),
       st.integers(0, 2**40), st.integers(0, 2**40))
def test_pow_mod_exponent_additivity(m, b, e1, e2):
    b %= m
    assert pow_mod(b, e1 + e2, m) == mul_mod(pow_mod(b, e1, m), pow_mod(b, e2, m), m)


def test_is_prime_examples():
    assert not is_prime_u64(1)
    assert is_prime_u64(25147657981)
    assert not is_prime_u64(10**10 + 1)
    assert prime_factors(10**10 + 1) == [101, 3541, 27961]


def test_is_prime_matches_sieve_below_1e6():
    primes = set(simple_sieve(10**6))
    for n in range(10**6):
        assert is_prime_u64(n) == (n in primes), n


@given(st.integers(10**6, 10**12))
def test_is_prime_matches_trial_division(n):
    assert is_prime_u64(n) == trial_is_prime(n)


def test_is_prime_large_known_values():
    assert is_prime_u64(M61)
    assert is_prime_u64(2**64 - 59)
    # strong pseudoprime to bases 2..37 would be the failure mode; this one fools bases up to 31
    assert not is_prime_u64(3825123056546413051)


@given(st.integers(2, 10**12))
def test_prime_factors_product(n):
    ps = prime_factors(n)
    assert ps == sorted(set(ps))
    assert all(trial_is_prime(p) for p in ps if p < 10**7)
    m = n
    for p in ps:
        assert m % p == 0
        while m % p == 0:
            m //= p
    assert m == 1


def test_prime_factors_needs_rho():
    p, q = 1000003, 1000033
    assert prime_factors(p * q) == [p, q]
    assert prime_factors(p * q * 4) == [2, p, q]


def test_primitive_root_examples():
    assert primitive_root(7) == 3
    assert primitive_root(13) == 2
    assert primitive_root(2) == 1
    with pytest.raises(NotPrime):
        primitive_root(10)


def _order(g, p):
    k, x = 1, g
    while x != 1:
        x = x * g % p
        k += 1
    return k


@pytest.mark.parametrize("p", simple_sieve(2000)[1:])
def test_primitive_root_is_least_generator(p):
    g = primitive_root(p)
    assert _order(g, p) == p - 1
    assert all(_order(h, p) < p - 1 for h in range(2, g))


@pytest.mark.parametrize("p", [25147657981, 2741702809, 999999999989])
def test_primitive_root_large(p):
    g = primitive_root(p)
    for q in prime_factors(p - 1):
        assert pow(g, (p - 1) // q, p) != 1


@pytest.mark.parametrize("mlo,mhi", [(3, 10**6), (10**9, 3 * 10**9), (3 * 10**9, 2**40)])
def test_batch_pow_mod_matches_builtin(mlo, mhi):
    rng = np.random.default_rng(7)
    m = rng.integers(mlo, mhi, size=2000, dtype=np.int64)
    b = rng.integers(0, 2**62, size=2000, dtype=np.int64) % m
    e = rng.integers(0, 2**40, size=2000, dtype=np.int64)
    out = batch_pow_mod(b, e, m)
    assert out.tolist() == [pow(int(x), int(y), int(z)) for x, y, z in zip(b, e, m)]


def test_batch_pow_mod_edge_moduli():
    m = np.array([2, 2**40, 2**40 - 1, 3_037_000_499, 3_037_000_500], dtype=np.int64)
    b = m - 1
    e = np.array([5, 2**39 + 3, 12345, 2**31, 7], dtype=np.int64)
    assert batch_pow_mod(b, e, m).tolist() == [pow(int(x), int(y), int(z)) for x, y, z in zip(b, e, m)]
    with pytest.raises(ValueError):
        batch_pow_mod(b, e, m + 2**40)
