"""Command-line interface.

Exit codes: 0 on success, 1 when a check or verification came out negative,
2 on usage errors (bad arguments, out-of-domain values, unsupported formats).
Output is deterministic for identical invocations, including under
--parallel.
"""

from __future__ import annotations

import argparse
import json
import sys

from .catalog import export_report, known_catalog, to_jsonable, verify_catalog
from .cycles import aliquot_sequence, find_cycles, verify_cycle
from .divisor import aliquot_s, classify, sigma
from .errors import ToolkitError
from .generators import borho_candidate, euler_candidate, thabit_candidate
from .pairs import PairKind, audit, check_amicable, check_betrothed, search_amicable, search_betrothed


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _nat(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("expected a nonnegative integer")
    return value


def _member_list(text: str) -> list[int]:
    try:
        return [_nat(part) for part in text.split(",") if part != ""]
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma-separated integers")


def _bool_word(flag: bool) -> str:
    return "true" if flag else "false"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "json", "csv"), default="text",
        help="output format (default: text)",
    )
    common.add_argument(
        "--parallel", action="store_true",
        help="partition searches across worker processes",
    )

    parser = argparse.ArgumentParser(
        prog="amicable",
        description="Divisor sums, amicable and betrothed pairs, aliquot cycles, "
        "and the classical pair-generating rules.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sigma", parents=[common], help="divisor sum of N")
    p.add_argument("n", type=_nat)

    p = sub.add_parser("s", parents=[common], help="proper-divisor sum of N")
    p.add_argument("n", type=_nat)

    p = sub.add_parser("classify", parents=[common], help="deficient, perfect, or abundant")
    p.add_argument("n", type=_nat)

    p = sub.add_parser("check-pair", parents=[common], help="test a pair of numbers")
    p.add_argument("m", type=_nat)
    p.add_argument("n", type=_nat)
    p.add_argument("--betrothed", action="store_true", help="test the betrothed condition")

    p = sub.add_parser("search", parents=[common], help="find all pairs up to a limit")
    p.add_argument("--max", type=_nat, required=True, dest="limit")
    p.add_argument("--betrothed", action="store_true", help="search betrothed pairs")

    p = sub.add_parser("aliquot", parents=[common], help="iterate the aliquot sequence")
    p.add_argument("n", type=_nat)
    p.add_argument("--max-steps", type=_nat, default=100)
    p.add_argument("--ceiling", type=_nat, default=10**15)

    p = sub.add_parser("cycles", parents=[common], help="search sociable cycles")
    p.add_argument("--max", type=_nat, required=True, dest="limit")
    p.add_argument("--max-len", type=_nat, required=True)

    p = sub.add_parser("cycle-verify", parents=[common], help="verify a claimed cycle")
    p.add_argument("members", type=_member_list, help="comma-separated members, in order")

    p = sub.add_parser("generate", parents=[common], help="run a generation rule")
    rule = p.add_subparsers(dest="rule", required=True)

    g = rule.add_parser("thabit", parents=[common], help="doubling rule")
    pick = g.add_mutually_exclusive_group(required=True)
    pick.add_argument("--k", type=_nat)
    pick.add_argument("--k-max", type=_nat)

    g = rule.add_parser("euler", parents=[common], help="two-exponent rule")
    g.add_argument("--m", type=_nat, required=True)
    g.add_argument("--n", type=_nat, required=True)

    g = rule.add_parser("borho", parents=[common], help="breeder construction")
    g.add_argument("--a", type=_nat, required=True)
    g.add_argument("--u", type=_nat, required=True)
    g.add_argument("--n", type=_nat, required=True)

    sub.add_parser("verify-known", parents=[common], help="re-verify the built-in catalog")

    p = sub.add_parser("audit", parents=[common], help="search then audit parity and gcds")
    p.add_argument("--max", type=_nat, required=True, dest="limit")

    return parser


def _emit(args, report, text_lines) -> None:
    if args.format == "text":
        for line in text_lines:
            print(line)
    else:
        sys.stdout.write(export_report(report, args.format).decode())
        if args.format == "json":
            sys.stdout.write("\n")


def _cmd_sigma(args) -> int:
    value = sigma(args.n)
    if args.format == "json":
        print(_dumps({"n": str(args.n), "sigma": str(value)}))
    elif args.format == "text":
        print(value)
    else:
        raise ToolkitError("CSV is not defined for scalar results")
    return 0


def _cmd_s(args) -> int:
    value = aliquot_s(args.n)
    if args.format == "json":
        print(_dumps({"n": str(args.n), "s": str(value)}))
    elif args.format == "text":
        print(value)
    else:
        raise ToolkitError("CSV is not defined for scalar results")
    return 0


def _cmd_classify(args) -> int:
    result = classify(args.n)
    if args.format == "text":
        print(result.tag.value)
    elif args.format == "json":
        print(_dumps(to_jsonable(result)))
    else:
        raise ToolkitError("CSV is not defined for classifications")
    return 0


def _cmd_check_pair(args) -> int:
    checker = check_betrothed if args.betrothed else check_amicable
    verdict = checker(args.m, args.n)
    lines = [verdict.kind.value]
    if verdict.guard_failures:
        lines.append("guards: " + ", ".join(g.value for g in verdict.guard_failures))
    _emit(args, verdict, lines)
    wanted = PairKind.BETROTHED if args.betrothed else PairKind.AMICABLE
    return 0 if verdict.kind is wanted else 1


def _cmd_search(args) -> int:
    searcher = search_betrothed if args.betrothed else search_amicable
    report = searcher(args.limit, parallel=args.parallel)
    lines = [f"{m} {n}" for m, n in report.pairs]
    lines.append(
        f"pairs={len(report.pairs)} all_even={_bool_word(report.all_even)} "
        f"min_gcd={report.min_gcd} oracle={report.oracle.value}"
    )
    _emit(args, report, lines)
    return 0


def _cmd_aliquot(args) -> int:
    result = aliquot_sequence(args.n, args.max_steps, args.ceiling)
    lines = [" ".join(str(v) for v in result.trajectory)]
    tail = f"outcome: {result.outcome.value}"
    if result.fixed_point is not None:
        tail += f" {result.fixed_point}"
    if result.cycle is not None:
        tail += " [" + " ".join(str(v) for v in result.cycle) + f"] entry={result.entry_index}"
    lines.append(tail)
    _emit(args, result, lines)
    return 0


def _cmd_cycles(args) -> int:
    cycles = find_cycles(args.limit, args.max_len)
    lines = [" ".join(str(v) for v in c.members) for c in cycles]
    lines.append(f"cycles={len(cycles)}")
    _emit(args, cycles, lines)
    return 0


def _cmd_cycle_verify(args) -> int:
    check = verify_cycle(args.members)
    if args.format == "json":
        print(_dumps({
            "members": [str(v) for v in args.members],
            "ok": check.ok,
            "failure": check.failure,
        }))
    elif args.format == "text":
        if check.ok:
            print(f"valid cycle of length {len(args.members)}")
        else:
            print(f"not a cycle: {check.failure}")
    else:
        raise ToolkitError("CSV is not defined for cycle verdicts")
    return 0 if check.ok else 1


def _describe_flag(value: int, flag: bool) -> str:
    return f"{value} ({'prime' if flag else 'composite'})"


def _thabit_line(c) -> str:
    head = (
        f"k={c.k}: p={_describe_flag(c.p, c.p_prime)}, "
        f"q={_describe_flag(c.q, c.q_prime)}, r={_describe_flag(c.r, c.r_prime)}"
    )
    if c.pair is None:
        return head + " -> rejected"
    status = "verified" if c.verified else "NOT verified"
    return head + f" -> pair ({c.pair[0]}, {c.pair[1]}) {status}"


def _cmd_generate(args) -> int:
    if args.rule == "thabit":
        if args.k_max is not None:
            candidates = [thabit_candidate(k) for k in range(1, args.k_max + 1)]
            _emit(args, candidates, [_thabit_line(c) for c in candidates])
            return 0 if any(c.verified for c in candidates) else 1
        candidate = thabit_candidate(args.k)
        _emit(args, candidate, [_thabit_line(candidate)])
        return 0 if candidate.verified else 1
    if args.rule == "euler":
        c = euler_candidate(args.m, args.n)
        head = (
            f"m={c.m} n={c.n}: a={c.a}, p={_describe_flag(c.p, c.p_prime)}, "
            f"q={_describe_flag(c.q, c.q_prime)}, r={_describe_flag(c.r, c.r_prime)}"
        )
        if c.pair is None:
            line = head + " -> rejected"
        else:
            line = head + f" -> pair ({c.pair[0]}, {c.pair[1]}) " + (
                "verified" if c.verified else "NOT verified"
            )
        _emit(args, c, [line])
        return 0 if c.verified else 1
    c = borho_candidate(args.a, args.u, args.n)
    failed = [
        name
        for name, ok in (
            ("breeder_amicable", c.hypothesis.breeder_amicable),
            ("t_prime", c.hypothesis.t_prime),
            ("p1_prime", c.hypothesis.p1_prime),
            ("p2_prime", c.hypothesis.p2_prime),
            ("coprime_au_t", c.hypothesis.coprime_au_t),
            ("coprime_au_p1", c.hypothesis.coprime_au_p1),
            ("coprime_a_p2", c.hypothesis.coprime_a_p2),
        )
        if not ok
    ]
    head = f"a={c.a} u={c.u} n={c.n}: t={c.t}, p1={c.p1}, p2={c.p2}"
    if c.degenerate_subtraction:
        head += " (degenerate subtraction)"
    if c.pair is None:
        line = head + "; failed: " + ", ".join(failed) + " -> rejected"
    else:
        line = head + f" -> pair ({c.pair[0]}, {c.pair[1]}) " + (
            "verified" if c.verified else "NOT verified"
        )
    _emit(args, c, [line])
    return 0 if c.verified else 1


def _cmd_verify_known(args) -> int:
    results = verify_catalog()
    if args.format == "json":
        payload = [
            {"entry": to_jsonable(entry), "ok": ok} for entry, ok in results
        ]
        print(_dumps(payload))
    elif args.format == "text":
        for entry, ok in results:
            members = ",".join(str(v) for v in entry.members)
            print(f"{'ok' if ok else 'FAIL'} {entry.kind.value} {members} ({entry.attribution})")
        print(f"verified {sum(ok for _, ok in results)}/{len(results)} entries")
    else:
        raise ToolkitError("CSV is not defined for catalog verification")
    return 0 if all(ok for _, ok in results) else 1


def _cmd_audit(args) -> int:
    report = search_amicable(args.limit, parallel=args.parallel)
    result = audit(report)
    if args.format == "json":
        print(_dumps({
            "limit": str(args.limit),
            "pairs": str(len(report.pairs)),
            "all_even": result.all_even,
            "min_gcd": str(result.min_gcd),
            "coprime_found": result.coprime_found,
        }))
    elif args.format == "text":
        print(
            f"pairs={len(report.pairs)} all_even={_bool_word(result.all_even)} "
            f"min_gcd={result.min_gcd} coprime_found={_bool_word(result.coprime_found)}"
        )
    else:
        raise ToolkitError("CSV is not defined for audits")
    return 0


_HANDLERS = {
    "sigma": _cmd_sigma,
    "s": _cmd_s,
    "classify": _cmd_classify,
    "check-pair": _cmd_check_pair,
    "search": _cmd_search,
    "aliquot": _cmd_aliquot,
    "cycles": _cmd_cycles,
    "cycle-verify": _cmd_cycle_verify,
    "generate": _cmd_generate,
    "verify-known": _cmd_verify_known,
    "audit": _cmd_audit,
}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if exc.code is not None else 0
        return code if isinstance(code, int) else 2
    try:
        return _HANDLERS[args.command](args)
    except ToolkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
