"""Known-value catalog and report serialization.

The catalog pins the classical reference values the rest of the package is
measured against: five historical amicable pairs, the Paganini and Euler-rule
pairs, the two smallest betrothed pairs, and Poulet's five-cycle. A self-test
re-verifies every entry from scratch.

Serialization notes. JSON is the round-trippable format: every integer is
rendered as a decimal string so values above 2**53 survive any JSON reader,
key order is fixed, and output is compact, hence byte-deterministic. CSV is
defined for pair-shaped reports only (one row per pair, columns
m,n,kind,gcd,parity).
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from enum import Enum
from math import gcd

from .cycles import AliquotOutcome, AliquotResult, SociableCycle, verify_cycle
from .divisor import Classification, NumberClass
from .errors import UnsupportedFormat
from .generators import (
    BorhoCandidate,
    BorhoHypothesis,
    EulerCandidate,
    ThabitCandidate,
    verify_pair_by_sigma,
)
from .pairs import (
    AuditResult,
    GuardFailure,
    Oracle,
    PairKind,
    PairVerdict,
    SearchReport,
    check_amicable,
    check_betrothed,
)

# Exhaustive computational searches of the literature have pushed the least
# possible member product of a coprime amicable pair beyond this bound.
# Metadata only: nothing in this package asserts or re-derives it.
COPRIME_PRODUCT_SEARCH_BOUND = 10**65


class EntryKind(str, Enum):
    AMICABLE_PAIR = "AmicablePair"
    BETROTHED_PAIR = "BetrothedPair"
    SOCIABLE_CYCLE = "SociableCycle"


@dataclass(frozen=True)
class KnownEntry:
    kind: EntryKind
    members: tuple[int, ...]
    attribution: str
    source: str


_CATALOG = (
    KnownEntry(
        EntryKind.AMICABLE_PAIR, (220, 284),
        "Pythagoras", "known to the Pythagorean school, ca. 500 BC",
    ),
    KnownEntry(
        EntryKind.AMICABLE_PAIR, (1184, 1210),
        "Paganini", "found by the sixteen-year-old Niccolo Paganini, 1866",
    ),
    KnownEntry(
        EntryKind.AMICABLE_PAIR, (2620, 2924),
        "Euler", "from Euler's 1747 catalogue",
    ),
    KnownEntry(
        EntryKind.AMICABLE_PAIR, (5020, 5564),
        "Euler", "from Euler's 1747 catalogue",
    ),
    KnownEntry(
        EntryKind.AMICABLE_PAIR, (17296, 18416),
        "Fermat", "announced by Fermat, 1636; the doubling rule at k = 3",
    ),
    KnownEntry(
        EntryKind.AMICABLE_PAIR, (9363584, 9437056),
        "Descartes", "announced by Descartes, 1638; the doubling rule at k = 6",
    ),
    KnownEntry(
        EntryKind.AMICABLE_PAIR, (2172649216, 2181168896),
        "Euler", "Euler's two-exponent rule at (m, n) = (1, 8)",
    ),
    KnownEntry(
        EntryKind.BETROTHED_PAIR, (48, 75),
        "classical", "smallest betrothed pair",
    ),
    KnownEntry(
        EntryKind.BETROTHED_PAIR, (140, 195),
        "classical", "second smallest betrothed pair",
    ),
    KnownEntry(
        EntryKind.SOCIABLE_CYCLE, (12496, 14288, 15472, 14536, 14264),
        "Poulet", "found by Paul Poulet, 1918; smallest cycle of length 5",
    ),
)


def known_catalog() -> list[KnownEntry]:
    """The reference entries, in catalog order."""
    return list(_CATALOG)


def verify_catalog(entries: list[KnownEntry] | None = None) -> list[tuple[KnownEntry, bool]]:
    """Re-verify each entry from first principles; self-test for the catalog."""
    results = []
    for entry in entries if entries is not None else _CATALOG:
        if entry.kind is EntryKind.AMICABLE_PAIR:
            m, n = entry.members
            ok = check_amicable(m, n).kind is PairKind.AMICABLE and verify_pair_by_sigma(m, n)
        elif entry.kind is EntryKind.BETROTHED_PAIR:
            m, n = entry.members
            ok = check_betrothed(m, n).kind is PairKind.BETROTHED
        else:
            ok = verify_cycle(entry.members).ok
        results.append((entry, ok))
    return results


# ---------------------------------------------------------------------------
# JSON encoding: fixed key order, every integer as a decimal string.

def _enc(x: int) -> str:
    return str(x)

def _enc_opt(x: int | None) -> str | None:
    return None if x is None else str(x)

def _enc_pair(pair: tuple[int, int] | None) -> dict | None:
    if pair is None:
        return None
    return {"m": str(pair[0]), "n": str(pair[1])}

def _enc_seq(values) -> list[str]:
    return [str(v) for v in values]


def to_jsonable(report) -> object:
    """The JSON-ready form of any report object this package produces."""
    if isinstance(report, PairVerdict):
        return {
            "m": _enc(report.m),
            "n": _enc(report.n),
            "kind": report.kind.value,
            "s_m": _enc(report.s_m),
            "s_n": _enc(report.s_n),
            "guard_failures": [g.value for g in report.guard_failures],
        }
    if isinstance(report, SearchReport):
        return {
            "limit": _enc(report.limit),
            "pairs": [_enc_pair(p) for p in report.pairs],
            "all_even": report.all_even,
            "min_gcd": _enc(report.min_gcd),
            "oracle": report.oracle.value,
        }
    if isinstance(report, AuditResult):
        return {
            "all_even": report.all_even,
            "min_gcd": _enc(report.min_gcd),
            "coprime_found": report.coprime_found,
        }
    if isinstance(report, AliquotResult):
        return {
            "start": _enc(report.start),
            "trajectory": _enc_seq(report.trajectory),
            "outcome": report.outcome.value,
            "fixed_point": _enc_opt(report.fixed_point),
            "cycle": None if report.cycle is None else _enc_seq(report.cycle),
            "entry_index": _enc_opt(report.entry_index),
        }
    if isinstance(report, SociableCycle):
        return {"members": _enc_seq(report.members), "length": _enc(report.length)}
    if isinstance(report, NumberClass):
        return {"tag": report.tag.value, "n": _enc(report.n), "s_value": _enc(report.s_value)}
    if isinstance(report, ThabitCandidate):
        return {
            "rule": "thabit",
            "k": _enc(report.k),
            "p": _enc(report.p),
            "q": _enc(report.q),
            "r": _enc(report.r),
            "p_prime": report.p_prime,
            "q_prime": report.q_prime,
            "r_prime": report.r_prime,
            "primality_mode": report.primality_mode,
            "pair": _enc_pair(report.pair),
            "verified": report.verified,
        }
    if isinstance(report, EulerCandidate):
        return {
            "rule": "euler",
            "m": _enc(report.m),
            "n": _enc(report.n),
            "a": _enc(report.a),
            "p": _enc(report.p),
            "q": _enc(report.q),
            "r": _enc(report.r),
            "p_prime": report.p_prime,
            "q_prime": report.q_prime,
            "r_prime": report.r_prime,
            "primality_mode": report.primality_mode,
            "pair": _enc_pair(report.pair),
            "verified": report.verified,
        }
    if isinstance(report, BorhoCandidate):
        h = report.hypothesis
        return {
            "rule": "borho",
            "a": _enc(report.a),
            "u": _enc(report.u),
            "n": _enc(report.n),
            "t": _enc(report.t),
            "p1": _enc(report.p1),
            "p2": _enc(report.p2),
            "degenerate_subtraction": report.degenerate_subtraction,
            "hypothesis": {
                "breeder_amicable": h.breeder_amicable,
                "t_prime": h.t_prime,
                "p1_prime": h.p1_prime,
                "p2_prime": h.p2_prime,
                "coprime_au_t": h.coprime_au_t,
                "coprime_au_p1": h.coprime_au_p1,
                "coprime_a_p2": h.coprime_a_p2,
            },
            "primality_mode": report.primality_mode,
            "pair": _enc_pair(report.pair),
            "verified": report.verified,
        }
    if isinstance(report, KnownEntry):
        return {
            "kind": report.kind.value,
            "members": _enc_seq(report.members),
            "attribution": report.attribution,
            "source": report.source,
        }
    if isinstance(report, (list, tuple)):
        return [to_jsonable(item) for item in report]
    raise UnsupportedFormat(f"no serialization defined for {type(report).__name__}")


def _csv_rows(report) -> list[tuple[int, int]]:
    if isinstance(report, PairVerdict):
        return [(report.m, report.n)]
    if isinstance(report, SearchReport):
        return list(report.pairs)
    raise UnsupportedFormat(
        f"CSV is defined for pair reports only, not {type(report).__name__}"
    )


def _pair_kind(m: int, n: int) -> str:
    if check_amicable(m, n).kind is PairKind.AMICABLE:
        return PairKind.AMICABLE.value
    if check_betrothed(m, n).kind is PairKind.BETROTHED:
        return PairKind.BETROTHED.value
    return PairKind.NEITHER.value


def _parity(m: int, n: int) -> str:
    if m % 2 == 0 and n % 2 == 0:
        return "even"
    if m % 2 == 1 and n % 2 == 1:
        return "odd"
    return "mixed"


def export_report(report, fmt: str = "json") -> bytes:
    """Serialize a report to bytes; formats are 'json' and 'csv'."""
    if fmt == "json":
        return json.dumps(to_jsonable(report), separators=(",", ":")).encode()
    if fmt == "csv":
        rows = _csv_rows(report)
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["m", "n", "kind", "gcd", "parity"])
        for m, n in rows:
            kind = report.kind.value if isinstance(report, PairVerdict) else _pair_kind(m, n)
            writer.writerow([m, n, kind, gcd(m, n), _parity(m, n)])
        return buf.getvalue().encode()
    raise UnsupportedFormat(f"unknown format {fmt!r}")


# ---------------------------------------------------------------------------
# JSON decoding, the inverse of export_report(..., "json").

def _dec(x: str) -> int:
    return int(x)

def _dec_opt(x: str | None) -> int | None:
    return None if x is None else int(x)

def _dec_pair(obj: dict | None) -> tuple[int, int] | None:
    if obj is None:
        return None
    return (int(obj["m"]), int(obj["n"]))


def _loads(raw: bytes | str) -> object:
    if isinstance(raw, bytes):
        raw = raw.decode()
    return json.loads(raw)


def pair_verdict_from_json(raw: bytes | str) -> PairVerdict:
    d = _loads(raw)
    return PairVerdict(
        m=_dec(d["m"]),
        n=_dec(d["n"]),
        s_m=_dec(d["s_m"]),
        s_n=_dec(d["s_n"]),
        kind=PairKind(d["kind"]),
        guard_failures=tuple(GuardFailure(g) for g in d["guard_failures"]),
    )


def search_report_from_json(raw: bytes | str) -> SearchReport:
    d = _loads(raw)
    return SearchReport(
        limit=_dec(d["limit"]),
        pairs=tuple(_dec_pair(p) for p in d["pairs"]),
        all_even=d["all_even"],
        min_gcd=_dec(d["min_gcd"]),
        oracle=Oracle(d["oracle"]),
    )


def aliquot_result_from_json(raw: bytes | str) -> AliquotResult:
    d = _loads(raw)
    return AliquotResult(
        start=_dec(d["start"]),
        trajectory=tuple(int(v) for v in d["trajectory"]),
        outcome=AliquotOutcome(d["outcome"]),
        fixed_point=_dec_opt(d["fixed_point"]),
        cycle=None if d["cycle"] is None else tuple(int(v) for v in d["cycle"]),
        entry_index=_dec_opt(d["entry_index"]),
    )


def sociable_cycle_from_json(raw: bytes | str) -> SociableCycle:
    d = _loads(raw)
    return SociableCycle(
        members=tuple(int(v) for v in d["members"]), length=_dec(d["length"])
    )


def number_class_from_json(raw: bytes | str) -> NumberClass:
    d = _loads(raw)
    return NumberClass(Classification(d["tag"]), _dec(d["n"]), _dec(d["s_value"]))


def known_entries_from_json(raw: bytes | str) -> list[KnownEntry]:
    return [
        KnownEntry(
            kind=EntryKind(d["kind"]),
            members=tuple(int(v) for v in d["members"]),
            attribution=d["attribution"],
            source=d["source"],
        )
        for d in _loads(raw)
    ]


def candidate_from_json(raw: bytes | str):
    """Rebuild a generator candidate; the 'rule' field picks the type."""
    d = _loads(raw)
    rule = d.get("rule")
    if rule == "thabit":
        return ThabitCandidate(
            k=_dec(d["k"]),
            p=_dec(d["p"]), q=_dec(d["q"]), r=_dec(d["r"]),
            p_prime=d["p_prime"], q_prime=d["q_prime"], r_prime=d["r_prime"],
            primality_mode=d["primality_mode"],
            pair=_dec_pair(d["pair"]),
            verified=d["verified"],
        )
    if rule == "euler":
        return EulerCandidate(
            m=_dec(d["m"]), n=_dec(d["n"]), a=_dec(d["a"]),
            p=_dec(d["p"]), q=_dec(d["q"]), r=_dec(d["r"]),
            p_prime=d["p_prime"], q_prime=d["q_prime"], r_prime=d["r_prime"],
            primality_mode=d["primality_mode"],
            pair=_dec_pair(d["pair"]),
            verified=d["verified"],
        )
    if rule == "borho":
        h = d["hypothesis"]
        return BorhoCandidate(
            a=_dec(d["a"]), u=_dec(d["u"]), n=_dec(d["n"]),
            t=_dec(d["t"]), p1=_dec(d["p1"]), p2=_dec(d["p2"]),
            degenerate_subtraction=d["degenerate_subtraction"],
            hypothesis=BorhoHypothesis(
                breeder_amicable=h["breeder_amicable"],
                t_prime=h["t_prime"],
                p1_prime=h["p1_prime"],
                p2_prime=h["p2_prime"],
                coprime_au_t=h["coprime_au_t"],
                coprime_au_p1=h["coprime_au_p1"],
                coprime_a_p2=h["coprime_a_p2"],
            ),
            primality_mode=d["primality_mode"],
            pair=_dec_pair(d["pair"]),
            verified=d["verified"],
        )
    raise UnsupportedFormat(f"unknown candidate rule {rule!r}")
