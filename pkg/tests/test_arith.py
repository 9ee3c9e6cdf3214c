import math
import random

import pytest

from mobius_partitions.arith import build_sieve, mobius, mobius_scaled, totient


def brute_mobius(n):
    # factor by trial division, independent of the sieve
    count = 0
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            m //= d
            if m % d == 0:
                return 0
            count += 1
        else:
            d += 1
    if m > 1:
        count += 1
    return (-1) ** count


def brute_totient(n):
    return sum(1 for m in range(1, n + 1) if math.gcd(m, n) == 1)


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def test_limit_one():
    t = build_sieve(1)
    assert mobius(t, 1) == 1
    assert totient(t, 1) == 1
    assert t.spf[1] == 1


def test_zero_limit_rejected():
    with pytest.raises(ValueError):
        build_sieve(0)


def test_known_mu_values():
    t = build_sieve(10)
    assert mobius(t, 2) == -1
    assert mobius(t, 4) == 0
    assert mobius(t, 6) == 1
    assert mobius(t, 9) == 0


def test_mu_against_trial_division():
    t = build_sieve(300)
    for n in range(1, 301):
        assert mobius(t, n) == brute_mobius(n), n
    assert mobius(t, 30) == -1
    assert mobius(t, 13) == -1


def test_phi_against_gcd_count():
    t = build_sieve(200)
    for n in range(1, 201):
        assert totient(t, n) == brute_totient(n), n
    assert totient(t, 2) == 1
    assert totient(t, 12) == 4


def test_divisor_sum_identities():
    t = build_sieve(200)
    assert sum(t.mu[d] for d in divisors(12)) == 0
    for n in range(1, 201):
        assert sum(t.mu[d] for d in divisors(n)) == (1 if n == 1 else 0)
        assert sum(t.phi[d] for d in divisors(n)) == n


def test_prime_entries():
    t = build_sieve(100)
    for p in (2, 3, 5, 7, 11, 97):
        assert t.is_prime(p)
        assert mobius(t, p) == -1
        assert totient(t, p) == p - 1
    for n in (1, 4, 6, 9, 100):
        assert not t.is_prime(n)


def test_mu_zero_iff_squarefull():
    t = build_sieve(500)
    for n in range(2, 501):
        has_square = any(n % (p * p) == 0 for p in range(2, int(n**0.5) + 1))
        assert (mobius(t, n) == 0) == has_square, n


def test_multiplicativity_random_coprime_pairs():
    t = build_sieve(2000)
    rng = random.Random(7)
    pairs = 0
    while pairs < 200:
        a = rng.randint(1, 60)
        b = rng.randint(1, 60)
        if math.gcd(a, b) != 1 or a * b > t.limit:
            continue
        assert mobius(t, a * b) == mobius(t, a) * mobius(t, b)
        assert totient(t, a * b) == totient(t, a) * totient(t, b)
        pairs += 1


def test_out_of_range_raises():
    t = build_sieve(10)
    for bad in (0, -1, 11):
        with pytest.raises(IndexError):
            mobius(t, bad)
        with pytest.raises(IndexError):
            totient(t, bad)


def test_mobius_scaled():
    t = build_sieve(60)
    assert mobius_scaled(t, 2, 1) == -1
    assert mobius_scaled(t, 2, 2) == 0
    assert mobius_scaled(t, 3, 10) == -1
    # alpha | k forces zero
    for alpha in (2, 3, 5):
        for k in range(1, 12):
            if alpha * alpha * k <= t.limit:
                assert mobius_scaled(t, alpha, alpha * k) == 0


def test_mobius_scaled_errors():
    t = build_sieve(50)
    with pytest.raises(ValueError):
        mobius_scaled(t, 4, 1)
    with pytest.raises(IndexError):
        mobius_scaled(t, 2, 26)
