"""Amicable and betrothed pair checks, bounded searches, and result audits.

A pair (m, n) is amicable when s(m) = n and s(n) = m with m != n, and
betrothed when s(m) = n + 1 and s(n) = m + 1. Searches anchor on the smaller
member m <= limit; the partner may lie beyond the limit. Every hit found
through the sieve is re-verified against `sigma_brute` before it is reported.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum
from math import gcd

from .divisor import SieveTable, aliquot_s, build_sieve, sigma_brute
from .errors import BadParameter


class PairKind(str, Enum):
    AMICABLE = "Amicable"
    BETROTHED = "Betrothed"
    NEITHER = "Neither"


class GuardFailure(str, Enum):
    ZERO_MEMBER = "ZeroMember"
    EQUAL_MEMBERS = "EqualMembers"


class Oracle(str, Enum):
    SIEVE = "Sieve"
    DIRECT = "Direct"


@dataclass(frozen=True)
class PairVerdict:
    """Outcome of checking one candidate pair.

    s values are recorded even when a guard demotes the verdict to Neither;
    s is total, with s(0) = 0 by convention.
    """

    m: int
    n: int
    s_m: int
    s_n: int
    kind: PairKind
    guard_failures: tuple[GuardFailure, ...] = ()


def _guards(m: int, n: int) -> tuple[GuardFailure, ...]:
    failures = []
    if m == 0 or n == 0:
        failures.append(GuardFailure.ZERO_MEMBER)
    if m == n:
        failures.append(GuardFailure.EQUAL_MEMBERS)
    return tuple(failures)


def check_amicable(m: int, n: int) -> PairVerdict:
    """Check s(m) = n and s(n) = m. Guard failures force Neither."""
    failures = _guards(m, n)
    s_m = aliquot_s(m)
    s_n = aliquot_s(n)
    hit = not failures and s_m == n and s_n == m
    kind = PairKind.AMICABLE if hit else PairKind.NEITHER
    return PairVerdict(m, n, s_m, s_n, kind, failures)


def check_betrothed(m: int, n: int) -> PairVerdict:
    """Check s(m) = n + 1 and s(n) = m + 1. Guard failures force Neither."""
    failures = _guards(m, n)
    s_m = aliquot_s(m)
    s_n = aliquot_s(n)
    hit = not failures and s_m == n + 1 and s_n == m + 1
    kind = PairKind.BETROTHED if hit else PairKind.NEITHER
    return PairVerdict(m, n, s_m, s_n, kind, failures)


def is_amicable_number(n: int) -> int | None:
    """The amicable partner of n, or None.

    Computes m = s(n) and accepts it only when m is nonzero, distinct from n,
    and maps back: s(m) = n. Primes, 1, 0, and perfect numbers all yield None.
    """
    partner = aliquot_s(n)
    if partner == 0 or partner == n:
        return None
    return partner if aliquot_s(partner) == n else None


@dataclass(frozen=True)
class SearchReport:
    """Pairs found below a limit plus audit fields computed over them.

    min_gcd is 0 when no pair was found. `oracle` records how s-values were
    obtained during the scan (shared sieve table or per-number sigma).
    """

    limit: int
    pairs: tuple[tuple[int, int], ...]
    all_even: bool
    min_gcd: int
    oracle: Oracle


@dataclass(frozen=True)
class AuditResult:
    all_even: bool
    min_gcd: int
    coprime_found: bool


# Sieve table handed to forked workers via the pool initializer.
_WORKER_TABLE: SieveTable | None = None


def _worker_init(table: SieveTable | None) -> None:
    global _WORKER_TABLE
    _WORKER_TABLE = table


def _scan_amicable(lo: int, hi: int, table: SieveTable | None) -> list[tuple[int, int]]:
    found = []
    if table is None:
        for m in range(lo, hi):
            n = aliquot_s(m)
            if n > m and aliquot_s(n) == m:
                found.append((m, n))
    else:
        s_values = table.s_values
        limit = table.limit
        for m in range(lo, hi):
            n = s_values[m]
            if n <= m:
                continue
            partner_s = s_values[n] if n <= limit else aliquot_s(n)
            if partner_s == m:
                found.append((m, n))
    return found


def _scan_betrothed(lo: int, hi: int, table: SieveTable | None) -> list[tuple[int, int]]:
    # mirrors _scan_amicable deliberately; the shifted condition stays visible
    found = []
    if table is None:
        for m in range(lo, hi):
            n = aliquot_s(m) - 1
            if n <= m:
                continue
            if aliquot_s(n) == m + 1:
                found.append((m, n))
    else:
        s_values = table.s_values
        limit = table.limit
        for m in range(lo, hi):
            n = s_values[m] - 1
            if n <= m:
                continue
            partner_s = s_values[n] if n <= limit else aliquot_s(n)
            if partner_s == m + 1:
                found.append((m, n))
    return found


def _amicable_chunk(bounds: tuple[int, int]) -> list[tuple[int, int]]:
    return _scan_amicable(bounds[0], bounds[1], _WORKER_TABLE)


def _betrothed_chunk(bounds: tuple[int, int]) -> list[tuple[int, int]]:
    return _scan_betrothed(bounds[0], bounds[1], _WORKER_TABLE)


def _run_scan(limit, table, chunk_fn, serial_fn, parallel, workers):
    if not parallel:
        return serial_fn(2, limit + 1, table)
    import multiprocessing

    if workers is None:
        workers = min(os.cpu_count() or 1, 8)
    step = max(1, (limit - 1) // (workers * 4) + 1)
    chunks = [(lo, min(lo + step, limit + 1)) for lo in range(2, limit + 1, step)]
    with multiprocessing.Pool(workers, initializer=_worker_init, initargs=(table,)) as pool:
        parts = pool.map(chunk_fn, chunks)
    return [pair for part in parts for pair in part]


def search_amicable(
    limit: int,
    *,
    method: str = "sieve",
    parallel: bool = False,
    workers: int | None = None,
) -> SearchReport:
    """All amicable pairs (m, n) with m < n and m <= limit.

    method 'sieve' tabulates s once and looks partners up (falling back to
    sigma for partners beyond the limit); 'direct' computes every s-value
    from the factorization. Both re-verify each hit with sigma_brute.
    `parallel` partitions the scan range across processes; the merged result
    is sorted, so output does not depend on scheduling.
    """
    table = _prepare(limit, method)
    hits = _run_scan(limit, table, _amicable_chunk, _scan_amicable, parallel, workers)
    pairs = []
    for m, n in sorted(set(hits)):
        assert sigma_brute(m) == m + n and sigma_brute(n) == m + n, (
            f"oracle disagreement on candidate pair ({m}, {n})"
        )
        pairs.append((m, n))
    return _report(limit, pairs, table)


def search_betrothed(
    limit: int,
    *,
    method: str = "sieve",
    parallel: bool = False,
    workers: int | None = None,
) -> SearchReport:
    """All betrothed pairs (m, n) with m < n and m <= limit.

    Same scan structure and double-checking as `search_amicable`, with the
    shifted condition s(m) = n + 1, s(n) = m + 1.
    """
    table = _prepare(limit, method)
    hits = _run_scan(limit, table, _betrothed_chunk, _scan_betrothed, parallel, workers)
    pairs = []
    for m, n in sorted(set(hits)):
        assert sigma_brute(m) - m == n + 1 and sigma_brute(n) - n == m + 1, (
            f"oracle disagreement on candidate pair ({m}, {n})"
        )
        pairs.append((m, n))
    return _report(limit, pairs, table)


def _prepare(limit: int, method: str) -> SieveTable | None:
    if limit < 2:
        raise BadParameter("search limit must be at least 2")
    if method == "sieve":
        return build_sieve(limit)
    if method == "direct":
        return None
    raise BadParameter(f"unknown search method {method!r}")


def _report(limit, pairs, table) -> SearchReport:
    return SearchReport(
        limit=limit,
        pairs=tuple(pairs),
        all_even=all(m % 2 == 0 and n % 2 == 0 for m, n in pairs),
        min_gcd=min((gcd(m, n) for m, n in pairs), default=0),
        oracle=Oracle.SIEVE if table is not None else Oracle.DIRECT,
    )


def audit(report: SearchReport) -> AuditResult:
    """Recompute parity and gcd facts from the report's pairs.

    Everything is derived from the listed pairs themselves, never copied from
    the report's own flags, so this doubles as a consistency check.
    """
    gcds = [gcd(m, n) for m, n in report.pairs]
    return AuditResult(
        all_even=all(m % 2 == 0 and n % 2 == 0 for m, n in report.pairs),
        min_gcd=min(gcds, default=0),
        coprime_found=any(g == 1 for g in gcds),
    )
