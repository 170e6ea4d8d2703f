"""Command-line front end.

Every subcommand prints a deterministic text report, or a JSON document with
``--json``.  Integer results are rendered as decimal strings in JSON so that
consumers without big-integer support cannot silently overflow.  Exit codes:
0 success, 1 verification mismatch, 2 bad input or exceeded engine limit.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import __version__
from .bigraph import (
    BipartiteGraph,
    canonical_form,
    format_graph,
    is_connected,
    parse_graph,
    structural_flags,
)
from .counting import closed_form, total_count
from .errors import BimatchError
from .families import build_cycle_path, build_grm
from .invariants import invariant_report
from .kseq import enumerate_ksequences, jsets_from_ksequence
from .oracle import (
    FILTER_ALL_CONNECTED,
    FILTER_IND_ORD_R,
    FILTER_IND_ORD_TWO,
    MODE_LABELED,
    MODE_UNLABELED,
    EnumerationJob,
    enumerate_graphs,
)
from .profile import (
    classify_equal_r,
    classify_equal_two,
    compute_profile,
    ind_match_from_profile,
    is_ind_ord_one,
    ord_match_from_profile,
)

_FILTERS = {
    "ind-ord-2": FILTER_IND_ORD_TWO,
    "ind-ord-r": FILTER_IND_ORD_R,
    "connected": FILTER_ALL_CONNECTED,
}
_MODES = {"labeled": MODE_LABELED, "unlabeled": MODE_UNLABELED}


def _read_graph(source: str) -> BipartiteGraph:
    if source == "-":
        return parse_graph(sys.stdin.read())
    with open(source, "r", encoding="utf-8") as handle:
        return parse_graph(handle.read())


def _subset_names(mask: int) -> str:
    members = [str(i + 1) for i in range(mask.bit_length()) if mask >> i & 1]
    return "{" + ",".join(members) + "}"


def _stringify(value):
    """Render integers as decimal strings inside JSON results (bools stay bools)."""
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, dict):
        return {k: _stringify(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_stringify(v) for v in value]
    return value


def _emit(args, command: str, inputs: dict, results: dict, lines: list[str], started: float) -> None:
    if getattr(args, "json", False):
        document = {
            "command": command,
            "inputs": _stringify(inputs),
            "results": _stringify(results),
            "engine": {"name": "bimatch", "version": __version__},
            "elapsed_seconds": round(time.perf_counter() - started, 6),
        }
        print(json.dumps(document, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _cmd_invariants(args, started: float) -> int:
    g = _read_graph(args.graph)
    report = invariant_report(g)
    results = {
        "m": g.m,
        "n": g.n,
        "edges": g.edge_count(),
        "match": report.match,
        "min_match": report.min_match,
        "ind_match": report.ind_match,
        "ord_match": report.ord_match,
        "connected": report.connected,
        "has_leaf": report.has_leaf,
        "unmixed": report.unmixed,
    }
    lines = [f"{key} {value}" for key, value in results.items()]
    _emit(args, "invariants", {"graph": args.graph}, results, lines, started)
    return 0


def _cmd_profile(args, started: float) -> int:
    g = _read_graph(args.graph)
    profile = compute_profile(g)
    entries = sorted(profile.counts.items(), key=lambda kv: (kv[0].bit_count(), kv[0]))
    results = {
        "m": profile.m,
        "n": profile.n,
        "counts": [{"subset": _subset_names(mask), "count": c} for mask, c in entries],
    }
    lines = [f"{profile.m} {profile.n}"] + [f"{_subset_names(mask)} {c}" for mask, c in entries]
    _emit(args, "profile", {"graph": args.graph}, results, lines, started)
    return 0


def _cmd_classify(args, started: float) -> int:
    g = _read_graph(args.graph)
    profile = compute_profile(g)
    ind = ind_match_from_profile(profile)
    ord_ = ord_match_from_profile(profile)
    results = {"ind_match": ind, "ord_match": ord_}
    if args.r == 1:
        results["equal"] = is_ind_ord_one(g)
        results["r"] = 1
    elif args.r is not None:
        results["equal"] = classify_equal_r(profile, args.r)
        results["r"] = args.r
    else:
        outcome = classify_equal_two(g)
        results.update(
            {
                "equal": outcome.equal,
                "r": outcome.r if outcome.r is not None else "none",
                "z": outcome.z,
                "jsets": [_subset_names(mask) for mask in outcome.jsets],
                "c_x": outcome.c_x,
                "disjoint_case": outcome.disjoint_case,
                "connected": is_connected(g),
            }
        )
    lines = [f"{key} {value}" for key, value in results.items()]
    _emit(args, "classify", {"graph": args.graph, "r": args.r}, results, lines, started)
    return 0


def _cmd_count(args, started: float) -> int:
    breakdown = total_count(args.m, args.n)
    results: dict = {"m": args.m, "n": args.n, "total": breakdown.total}
    lines = [f"total {breakdown.total}"]
    if args.breakdown:
        disjoint = [
            {"split_size": size, "count": count}
            for size, count in breakdown.disjoint_terms
        ]
        ie = [
            {
                "sequences": [list(s.terms) for s in term.sequences],
                "sign": term.sign,
                "value": term.value,
            }
            for term in breakdown.inclusion_exclusion_terms
        ]
        results["disjoint_terms"] = disjoint
        results["inclusion_exclusion_terms"] = ie
        for entry in disjoint:
            lines.append(f"disjoint split={entry['split_size']} count={entry['count']}")
        for term in breakdown.inclusion_exclusion_terms:
            shown = ";".join(",".join(str(t) for t in s.terms) for s in term.sequences)
            lines.append(f"ie sign={term.sign:+d} value={term.value} sequences={shown}")
    _emit(args, "count", {"m": args.m, "n": args.n}, results, lines, started)
    return 0


def _cmd_closed_form(args, started: float) -> int:
    value = closed_form(args.m, args.n)
    note = "side-swap-allowed count" if args.m == args.n else "sides-labeled count"
    results = {"m": args.m, "n": args.n, "value": value, "note": note}
    _emit(args, "closed-form", {"m": args.m, "n": args.n}, results,
          [f"value {value}", f"note {note}"], started)
    return 0


def _cmd_kseq(args, started: float) -> int:
    sequences = enumerate_ksequences(args.m, args.min_length)
    entries = []
    lines = []
    for ks in sequences:
        jsets = jsets_from_ksequence(ks)
        entries.append(
            {
                "terms": list(ks.terms),
                "jsets": [_subset_names(mask) for mask in jsets.sets],
            }
        )
        shown = ",".join(str(t) for t in ks.terms)
        sets_shown = " ".join(_subset_names(mask) for mask in jsets.sets)
        lines.append(f"{shown} -> {sets_shown}")
    results = {"m": args.m, "min_length": args.min_length, "count": len(sequences),
               "sequences": entries}
    _emit(args, "kseq", {"m": args.m, "min_length": args.min_length}, results, lines, started)
    return 0


def _cmd_enumerate(args, started: float) -> int:
    job = EnumerationJob(args.m, args.n, _MODES[args.mode], _FILTERS[args.filter], args.r)
    count = enumerate_graphs(job, emit_dir=args.emit)
    inputs = {"m": args.m, "n": args.n, "mode": args.mode, "filter": args.filter}
    if args.r is not None:
        inputs["r"] = args.r
    results = dict(inputs, count=count)
    _emit(args, "enumerate", inputs, results, [f"count {count}"], started)
    return 0


def _cmd_construct(args, started: float) -> int:
    if args.family == "grm":
        if args.r is None or args.m is None:
            raise ValueError("construct grm needs --r and --m")
        g = build_grm(args.r, args.m)
    else:
        if args.k is None:
            raise ValueError("construct cycle-path needs --k")
        g = build_cycle_path(args.k)
    sys.stdout.write(format_graph(g))
    return 0


def _cmd_verify(args, started: float) -> int:
    rows = []
    mismatch = False
    for n in range(max(args.m, 3), args.n_max + 1):
        formula = total_count(args.m, n).total
        job = EnumerationJob(args.m, n, MODE_LABELED, FILTER_IND_ORD_TWO)
        oracle = enumerate_graphs(job)
        ok = formula == oracle
        mismatch = mismatch or not ok
        rows.append((n, formula, oracle, ok))
    lines = ["n,formula,oracle,match"]
    lines.extend(
        f"{n},{formula},{oracle},{'yes' if ok else 'NO'}" for n, formula, oracle, ok in rows
    )
    results = {
        "m": args.m,
        "rows": [
            {"n": n, "formula": formula, "oracle": oracle, "match": ok}
            for n, formula, oracle, ok in rows
        ],
        "all_match": not mismatch,
    }
    _emit(args, "verify", {"m": args.m, "n_max": args.n_max}, results, lines, started)
    return 1 if mismatch else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bimatch",
        description="Matching invariants of bipartite graphs and exact counts "
                    "of the graphs with induced = ordered matching number = 2.",
    )
    parser.add_argument("--version", action="version", version=f"bimatch {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true", help="emit a JSON report")

    p = sub.add_parser("invariants", help="matching numbers and flags of a graph")
    p.add_argument("graph", help="graph file, or - for stdin")
    add_json(p)
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("profile", help="neighborhood profile of a graph")
    p.add_argument("graph")
    add_json(p)
    p.set_defaults(func=_cmd_profile)

    p = sub.add_parser("classify", help="decide ind = ord = r from the profile")
    p.add_argument("graph")
    p.add_argument("--r", type=int, default=None,
                   help="target value (default: full ind = ord = 2 analysis)")
    add_json(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("count", help="formula count of ind = ord = 2 graphs")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--breakdown", action="store_true", help="attribute every term")
    add_json(p)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("closed-form", help="case-table count for m in {2,3,4}")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    add_json(p)
    p.set_defaults(func=_cmd_closed_form)

    p = sub.add_parser("kseq", help="admissible sequences and their set lists")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--min-length", type=int, default=3, choices=(3, 4))
    add_json(p)
    p.set_defaults(func=_cmd_kseq)

    p = sub.add_parser("enumerate", help="oracle enumeration of graph classes")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=sorted(_MODES), default="labeled")
    p.add_argument("--filter", choices=sorted(_FILTERS), default="ind-ord-2")
    p.add_argument("--r", type=int, default=None, help="target for --filter ind-ord-r")
    p.add_argument("--emit", default=None, help="directory for one file per class")
    add_json(p)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("construct", help="build a witness-family graph")
    p.add_argument("family", choices=("grm", "cycle-path"))
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("verify", help="formula vs oracle table, one row per n")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    add_json(p)
    p.set_defaults(func=_cmd_verify)

    return parser


def run(argv=None) -> int:
    """Parse arguments and execute; returns the process exit code."""
    parser = _build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        return args.func(args, started)
    except (BimatchError, ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    try:
        code = run()
        sys.stdout.flush()
    except BrokenPipeError:
        # Downstream consumer (e.g. head) closed the pipe; exit quietly.
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        code = 0
    sys.exit(code)


if __name__ == "__main__":
    main()
