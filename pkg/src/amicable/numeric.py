"""Integer primitives: gcd, primality, and factorization.

All functions work on Python's native arbitrary-precision integers, so there
is no overflow to worry about anywhere in the package. Primality testing is
deterministic below 2**64 (fixed Miller-Rabin witness set) and switches to a
Baillie-PSW style combination (the same witnesses plus a strong Lucas test)
above that bound; `prime_test_mode` reports which regime applies to a value.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

from .errors import BadParameter, ZeroInput

__all__ = [
    "gcd",
    "is_prime",
    "prime_test_mode",
    "factorize",
    "Factorization",
    "PRIME_DETERMINISTIC_BOUND",
]

# Below this bound the fixed witness set is a proven primality test.
PRIME_DETERMINISTIC_BOUND = 1 << 64

# The first twelve primes decide primality for every n < 3.3 * 10**24
# (Sorenson and Webster), comfortably covering the full 64-bit range.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _sieve_primes(limit: int) -> tuple[int, ...]:
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    return tuple(i for i, f in enumerate(flags) if f)


_TRIAL_LIMIT = 1000
_TRIAL_PRIMES = _sieve_primes(_TRIAL_LIMIT)


def _mr_composite_witness(a: int, d: int, s: int, n: int) -> bool:
    """True when base a proves n composite (n - 1 = d * 2**s, d odd)."""
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def _jacobi(a: int, n: int) -> int:
    # n odd and positive
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _half_mod(x: int, n: int) -> int:
    # division by 2 modulo odd n
    x %= n
    if x & 1:
        x += n
    return (x >> 1) % n


def _strong_lucas_prp(n: int) -> bool:
    """Strong Lucas probable-prime test with Selfridge's parameter choice.

    Assumes n is odd, larger than the trial-division primes, and has already
    survived the Miller-Rabin rounds.
    """
    if isqrt(n) ** 2 == n:
        return False
    D = 5
    while True:
        j = _jacobi(D, n)
        if j == -1:
            break
        if j == 0 and abs(D) % n != 0:
            return False
        D = -D - 2 if D > 0 else -D + 2
    Q = (1 - D) // 4

    d = n + 1
    s = (d & -d).bit_length() - 1
    d >>= s

    # U_1 = 1, V_1 = P = 1; walk the bits of d below the leading one.
    U, V, qk = 1, 1, Q % n
    for bit in bin(d)[3:]:
        U = U * V % n
        V = (V * V - 2 * qk) % n
        qk = qk * qk % n
        if bit == "1":
            U, V = _half_mod(U + V, n), _half_mod(D * U + V, n)
            qk = qk * Q % n

    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * qk) % n
        if V == 0:
            return True
        qk = qk * qk % n
    return False


def is_prime(n: int) -> bool:
    """Primality test for nonnegative integers.

    Deterministic for n < 2**64. Larger inputs get the same Miller-Rabin
    rounds (twelve fixed bases) plus a strong Lucas test; no counterexample
    to that combination is known, but the verdict is formally probabilistic,
    which callers can surface via `prime_test_mode`.
    """
    if n < 2:
        return False
    for p in _MR_BASES:
        if n == p:
            return True
        if n % p == 0:
            return False
    if n < 37 * 37:
        # no factor <= 37 and below 37**2, hence prime
        return True
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _MR_BASES:
        if _mr_composite_witness(a, d, s, n):
            return False
    if n < PRIME_DETERMINISTIC_BOUND:
        return True
    return _strong_lucas_prp(n)


def prime_test_mode(n: int) -> str:
    """'deterministic' when `is_prime(n)` is a proof, 'probabilistic' otherwise."""
    return "deterministic" if n < PRIME_DETERMINISTIC_BOUND else "probabilistic"


@dataclass(frozen=True)
class Factorization:
    """Prime-power decomposition with primes strictly increasing.

    `factors` is a tuple of (prime, exponent) pairs; the empty tuple encodes
    the factorization of 1.
    """

    factors: tuple[tuple[int, int], ...]
    value: int

    def reconstruct(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out


def _brent_factor(n: int) -> int:
    """A nontrivial factor of composite n via Brent's cycle-finding rho.

    Deterministic: the polynomial constant starts at 1 and is bumped whenever
    a round degenerates, so repeated runs split identically.
    """
    if n % 2 == 0:
        return 2
    c = 1
    while True:
        y, r, q = 2, 1, 1
        g, ys, x = 1, y, y
        m = 128
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
                g = gcd(q, n)
                k += m
            r <<= 1
        if g != n:
            return g
        # batched gcd overshot; replay one step at a time
        g = 1
        while g == 1:
            ys = (ys * ys + c) % n
            g = gcd(abs(x - ys), n)
        if g != n:
            return g
        c += 1


def _split_rough(n: int, counts: dict[int, int]) -> None:
    # n has no prime factor below _TRIAL_LIMIT
    stack = [n]
    while stack:
        v = stack.pop()
        if v == 1:
            continue
        if v < _TRIAL_LIMIT * _TRIAL_LIMIT or is_prime(v):
            counts[v] = counts.get(v, 0) + 1
            continue
        d = _brent_factor(v)
        stack.append(d)
        stack.append(v // d)


@lru_cache(maxsize=65536)
def factorize(n: int) -> Factorization:
    """Canonical factorization of n >= 1.

    Trial division by primes below 1000 first, then Brent's rho on whatever
    rough cofactor remains, recursing until every piece passes `is_prime`.
    Raises ZeroInput for n = 0 and BadParameter for negative n.
    """
    if not isinstance(n, int):
        raise BadParameter(f"factorize expects an integer, got {type(n).__name__}")
    if n < 0:
        raise BadParameter("factorize expects a nonnegative integer")
    if n == 0:
        raise ZeroInput("0 has no prime factorization")
    if n == 1:
        return Factorization((), 1)
    counts: dict[int, int] = {}
    rem = n
    for p in _TRIAL_PRIMES:
        if p * p > rem:
            break
        while rem % p == 0:
            counts[p] = counts.get(p, 0) + 1
            rem //= p
    if rem > 1:
        if rem < _TRIAL_LIMIT * _TRIAL_LIMIT or is_prime(rem):
            counts[rem] = counts.get(rem, 0) + 1
        else:
            _split_rough(rem, counts)
    return Factorization(tuple(sorted(counts.items())), n)
