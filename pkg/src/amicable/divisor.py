"""Divisor sums, the aliquot map, bulk sieving, and abundance classification.

Two independent routes to the divisor sum are kept side by side on purpose:
`sigma` multiplies geometric-series terms off the factorization, while
`sigma_brute` enumerates divisors directly. Searches computed with the sieve
re-verify their hits through the brute route, so a defect in one path cannot
silently corrupt results.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum
from math import isqrt

from .errors import BadParameter, LimitTooLarge, ZeroInput
from .numeric import factorize

__all__ = [
    "sigma",
    "sigma_brute",
    "aliquot_s",
    "build_sieve",
    "SieveTable",
    "classify",
    "NumberClass",
    "Classification",
    "DEFAULT_SIEVE_BUDGET",
    "SIEVE_BUDGET_ENV",
]

# Entry budget for sieve tables; override with the environment variable when
# a host can afford more (or should be capped tighter).
DEFAULT_SIEVE_BUDGET = 1 << 31
SIEVE_BUDGET_ENV = "AMICABLE_SIEVE_BUDGET"


def sigma(n: int) -> int:
    """Sum of all positive divisors of n, with sigma(0) = 0 by convention.

    Each prime power contributes 1 + p + ... + p**e, accumulated by repeated
    multiplication rather than the closed-form quotient.
    """
    if n < 0:
        raise BadParameter("sigma expects a nonnegative integer")
    if n == 0:
        return 0
    total = 1
    for p, e in factorize(n).factors:
        term = 1
        power = 1
        for _ in range(e):
            power *= p
            term += power
        total *= term
    return total


def sigma_brute(n: int) -> int:
    """Divisor sum by direct enumeration up to sqrt(n); oracle for `sigma`."""
    if n < 0:
        raise BadParameter("sigma_brute expects a nonnegative integer")
    if n == 0:
        return 0
    total = 0
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            total += d
            q = n // d
            if q != d:
                total += q
    return total


def aliquot_s(n: int) -> int:
    """Proper-divisor sum s(n) = sigma(n) - n, with s(0) = 0 and s(1) = 0."""
    if n <= 1:
        if n < 0:
            raise BadParameter("aliquot_s expects a nonnegative integer")
        return 0
    return sigma(n) - n


@dataclass
class SieveTable:
    """Aliquot sums for every index up to `limit`; treat as read-only."""

    limit: int
    s_values: list[int]


def build_sieve(limit: int, budget: int | None = None) -> SieveTable:
    """Tabulate s(n) for all n <= limit by one additive pass over divisors.

    For each d in 1..limit/2, d is added to the slot of every proper multiple
    of d. Slots 0 and 1 stay 0. Raises LimitTooLarge when limit + 1 entries
    exceed the budget (default 2**31, or the AMICABLE_SIEVE_BUDGET variable).
    """
    if limit < 1:
        raise BadParameter("sieve limit must be at least 1")
    if budget is None:
        env = os.environ.get(SIEVE_BUDGET_ENV)
        budget = int(env) if env else DEFAULT_SIEVE_BUDGET
    if limit + 1 > budget:
        raise LimitTooLarge(
            f"sieve of {limit + 1} entries exceeds the budget of {budget}"
        )
    s_values = [0] * (limit + 1)
    for d in range(1, limit // 2 + 1):
        for multiple in range(2 * d, limit + 1, d):
            s_values[multiple] += d
    return SieveTable(limit, s_values)


class Classification(str, Enum):
    DEFICIENT = "Deficient"
    PERFECT = "Perfect"
    ABUNDANT = "Abundant"


@dataclass(frozen=True)
class NumberClass:
    tag: Classification
    n: int
    s_value: int


def classify(n: int) -> NumberClass:
    """Deficient, perfect, or abundant according to s(n) versus n."""
    if n == 0:
        raise ZeroInput("0 is not classified")
    s = aliquot_s(n)
    if s == n:
        tag = Classification.PERFECT
    elif s > n:
        tag = Classification.ABUNDANT
    else:
        tag = Classification.DEFICIENT
    return NumberClass(tag, n, s)
