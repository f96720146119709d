"""Divisor engine: sigma, the aliquot map, sieving, classification."""

import random
from math import isqrt

import pytest

from amicable import (
    BadParameter,
    Classification,
    LimitTooLarge,
    ZeroInput,
    aliquot_s,
    build_sieve,
    classify,
    sigma,
    sigma_brute,
)


def sigma_oracle(n):
    # independent enumeration, written fresh here rather than imported
    if n == 0:
        return 0
    total = 0
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            total += d
            if d != n // d:
                total += n // d
    return total


def test_sigma_frozen_examples():
    assert sigma(12) == 28
    assert sigma(2**5) == 63
    assert sigma(1) == 1
    assert sigma(0) == 0
    assert sigma(220) == 504
    assert sigma(284) == 504
    assert sigma(48) == 124
    assert sigma(75) == 124
    assert sigma(360) == 1170


def test_sigma_rejects_negative():
    with pytest.raises(BadParameter):
        sigma(-1)


def test_sigma_brute_matches_examples():
    assert sigma_brute(12) == 28
    assert sigma_brute(71) == 72
    assert sigma_brute(0) == 0
    assert sigma_brute(1) == 1


def test_oracle_equivalence_to_1e4():
    table = build_sieve(10_000)
    for n in range(1, 10_001):
        brute = sigma_brute(n)
        assert sigma(n) == brute
        assert table.s_values[n] == brute - n


def test_sigma_multiplicative_on_coprime_pairs():
    from math import gcd

    rng = random.Random(551)
    checked = 0
    while checked < 100:
        m = rng.randrange(2, 30_000)
        n = rng.randrange(2, 30_000)
        if gcd(m, n) != 1:
            continue
        assert sigma(m * n) == sigma(m) * sigma(n)
        checked += 1


def test_sigma_powers_of_two():
    for e in range(0, 61):
        assert sigma(2**e) == 2 ** (e + 1) - 1


def test_aliquot_prime_law():
    # s(p) = 1 for the first 1000 primes
    primes = []
    n = 2
    while len(primes) < 1000:
        if all(n % p for p in primes if p * p <= n):
            primes.append(n)
        n += 1
    for p in primes:
        assert aliquot_s(p) == 1


def test_aliquot_conventions():
    assert aliquot_s(0) == 0
    assert aliquot_s(1) == 0
    assert aliquot_s(220) == 284
    assert aliquot_s(284) == 220
    assert aliquot_s(12) == 16


def test_build_sieve_values():
    table = build_sieve(300)
    assert table.limit == 300
    assert len(table.s_values) == 301
    assert table.s_values[0] == 0
    assert table.s_values[1] == 0
    assert table.s_values[220] == 284
    assert table.s_values[284] == 220
    assert table.s_values[(6)] == 6
    # spot-check every slot against the enumeration oracle
    for n in range(1, 301):
        assert table.s_values[n] == sigma_oracle(n) - n


def test_build_sieve_limit_one():
    table = build_sieve(1)
    assert table.s_values == [0, 0]


def test_build_sieve_rejects_bad_limits():
    with pytest.raises(BadParameter):
        build_sieve(0)
    with pytest.raises(LimitTooLarge):
        build_sieve(10_000, budget=1000)


def test_build_sieve_budget_env_override(monkeypatch):
    monkeypatch.setenv("AMICABLE_SIEVE_BUDGET", "100")
    with pytest.raises(LimitTooLarge):
        build_sieve(5000)
    monkeypatch.setenv("AMICABLE_SIEVE_BUDGET", "6000")
    assert build_sieve(5000).limit == 5000


def test_classify_frozen_examples():
    assert classify(220).tag is Classification.ABUNDANT
    assert classify(284).tag is Classification.DEFICIENT
    assert classify(6).tag is Classification.PERFECT
    assert classify(28).tag is Classification.PERFECT
    assert classify(1).tag is Classification.DEFICIENT
    assert classify(945).tag is Classification.ABUNDANT
    result = classify(220)
    assert (result.n, result.s_value) == (220, 284)


def test_classify_zero_rejected():
    with pytest.raises(ZeroInput):
        classify(0)


def test_classify_matches_definition_on_range():
    for n in range(1, 2000):
        r = classify(n)
        s = sigma_oracle(n) - n
        if s == n:
            assert r.tag is Classification.PERFECT
        elif s > n:
            assert r.tag is Classification.ABUNDANT
        else:
            assert r.tag is Classification.DEFICIENT
