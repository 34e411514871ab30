"""Command-line pipeline: family generation, growth reports, free-pair
search, freeness verification, and the property suites.

All reports are single JSON documents on stdout (``--pretty`` indents them);
diagnostics go to stderr.  Exit codes: 0 success/verified, 1 verification
failure or counterexample, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import serialize
from .automaton import build_automaton, classify_growth, family_A
from .errors import (
    CapExceeded,
    InvalidCertificate,
    MonoalgError,
    NotSubwordClosed,
    RecurrenceNotStabilized,
    RelationFails,
    TruncationTooSmall,
    WordVanishes,
)
from .finder import find_regular_pair
from .suites import SUITES, run_suites
from .verify import verify_free_subgroup, verify_group_relations, verify_lie_freeness


def _emit(doc: dict, pretty: bool) -> None:
    print(json.dumps(doc, indent=2 if pretty else None, sort_keys=False))


def _load_automaton(path: str):
    data = serialize.load(path)
    if "forbidden" in data:
        return build_automaton(serialize.presentation_from_json(data))
    if "edges" in data:
        return serialize.automaton_from_json(data)
    raise ValueError(f"{path}: neither a presentation nor an automaton file")


def _cmd_family(args) -> int:
    pres = family_A(args.n, gap_convention=args.gap_convention)
    doc = serialize.presentation_to_json(pres)
    if args.output:
        serialize.dump(doc, args.output)
    else:
        _emit(doc, args.pretty)
    return 0


def _cmd_growth(args) -> int:
    aut = _load_automaton(args.input)
    report = classify_growth(aut, k_max=args.max_len, hilbert=args.hilbert)
    doc = {
        "kind": report.kind,
        "counts": list(report.counts),
        "total_dims": _partial_dims(report.counts),
        "witness": None
        if report.witness_vertex is None
        else {
            "vertex": report.witness_vertex,
            "cycle_words": [serialize.word_to_json(w) for w in report.cycle_words],
        },
        "degree": report.degree,
        "hilbert": None
        if report.hilbert is None
        else {
            "numerator": list(report.hilbert[0]),
            "denominator": list(report.hilbert[1]),
        },
    }
    _emit(doc, args.pretty)
    return 0


def _partial_dims(counts):
    out, acc = [], 1
    for c in counts:
        acc += c
        out.append(acc)
    return out


def _cmd_find_free(args) -> int:
    aut = _load_automaton(args.input)
    cert = find_regular_pair(aut, cap=args.cap)
    doc = serialize.certificate_to_json(cert)
    if args.output:
        serialize.dump(doc, args.output)
    else:
        _emit(doc, args.pretty)
    return 0


def _cmd_verify_lie(args) -> int:
    aut = _load_automaton(args.input)
    cert = serialize.certificate_from_json(serialize.load(args.cert))
    report = verify_lie_freeness(aut, cert, args.degree)
    doc = {
        "degree": report.degree,
        "verdict": report.verdict,
        "rows": [
            {
                "pattern": serialize.word_to_json(r.pattern),
                "word": serialize.word_to_json(r.substituted),
                "leading": serialize.word_to_json(r.leading),
                "coefficient": r.coefficient,
            }
            for r in report.rows
        ],
        "offending": None
        if report.offending is None
        else serialize.word_to_json(report.offending),
    }
    _emit(doc, args.pretty)
    return 0 if report.verified else 1


def _cmd_verify_group(args) -> int:
    aut = _load_automaton(args.input)
    cert = serialize.certificate_from_json(serialize.load(args.cert))
    doc = {"verdict": "verified", "free_subgroup": None, "relations": None}
    code = 0
    try:
        fs = verify_free_subgroup(
            aut, cert, args.max_word_len, truncation=args.truncation
        )
        doc["free_subgroup"] = {
            "max_word_len": fs.max_word_len,
            "truncation": fs.truncation,
            "words_checked": fs.words_checked,
            "verdict": fs.verdict,
        }
    except WordVanishes as exc:
        doc["verdict"] = "refuted"
        doc["free_subgroup"] = {"verdict": "refuted", "vanishing_word": list(exc.word)}
        print(f"alarm: {exc}", file=sys.stderr)
        code = 1
    if args.relations is not None and code == 0:
        trunc = args.truncation if args.truncation is not None else 8
        try:
            gr = verify_group_relations(args.relations, trunc)
            doc["relations"] = {
                "n": gr.n,
                "truncation": gr.truncation,
                "tuples_checked": len(gr.checked),
                "verdict": gr.verdict,
            }
        except RelationFails as exc:
            doc["verdict"] = "refuted"
            doc["relations"] = {"verdict": "refuted", "pattern": list(exc.pattern)}
            print(f"alarm: {exc}", file=sys.stderr)
            code = 1
    _emit(doc, args.pretty)
    return code


def _cmd_props(args) -> int:
    results = run_suites([args.suite], seed=args.seed)
    doc = {
        "seed": args.seed,
        "ok": all(r.ok for r in results),
        "suites": [
            {
                "name": r.name,
                "ok": r.ok,
                "laws": [
                    {
                        "name": law.name,
                        "cases": law.cases,
                        "ok": law.ok,
                        "counterexample": law.counterexample,
                    }
                    for law in r.laws
                ],
            }
            for r in results
        ],
    }
    _emit(doc, args.pretty)
    if not doc["ok"]:
        for r in results:
            for law in r.laws:
                if not law.ok:
                    print(
                        f"counterexample in {r.name}/{law.name}: {law.counterexample}",
                        file=sys.stderr,
                    )
        return 1
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monoalg",
        description="Monomial-algebra growth automata and freeness certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("family", help="emit the n-parameter presentation family")
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--gap-convention",
        choices=("relations", "prose"),
        default="relations",
        help="which reading of the repeated-letter bound to use",
    )
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("growth", help="count words, classify growth, Hilbert series")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--max-len", type=int, default=12)
    p.add_argument("--hilbert", action="store_true")
    p.set_defaults(func=_cmd_growth)

    p = sub.add_parser("find-free", help="search for a regular well-based pair")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--cap", type=int, default=64)
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_find_free)

    p = sub.add_parser("verify-lie", help="verify Hall-word leading terms")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--cert", required=True)
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=_cmd_verify_lie)

    p = sub.add_parser("verify-group", help="verify group words stay nontrivial")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--cert", required=True)
    p.add_argument("--max-word-len", type=int, required=True)
    p.add_argument("--truncation", type=int, default=None)
    p.add_argument(
        "--relations",
        type=int,
        default=None,
        metavar="N",
        help="also check the commutator relations of the n=N family",
    )
    p.set_defaults(func=_cmd_verify_group)

    p = sub.add_parser("props", help="run a property suite")
    p.add_argument("--suite", choices=sorted(SUITES) + ["all"], required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_props)

    for sp in sub.choices.values():
        sp.add_argument("--pretty", action="store_true", help="indent JSON output")
    return parser


def run(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except json.JSONDecodeError as exc:
        print(
            f"error: malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}",
            file=sys.stderr,
        )
        return 2
    except (CapExceeded, WordVanishes, RelationFails) as exc:
        print(f"alarm: {exc}", file=sys.stderr)
        return 1
    except (
        FileNotFoundError,
        KeyError,
        ValueError,
        InvalidCertificate,
        NotSubwordClosed,
        TruncationTooSmall,
        RecurrenceNotStabilized,
        MonoalgError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
