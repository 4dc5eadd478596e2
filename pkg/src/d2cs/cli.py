"""Command-line entry point: ``d2cs <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import formulas, reconcile
from .edgelist import format_graph, parse_graph
from .enum_all import enum_all_d2cs
from .generators import FamilySpec, parse_params
from .graph import Graph, GraphError, sorted_tuple
from .oracle import OracleLimitError, canonical, oracle_count, oracle_maximal, oracle_maximum
from .schordal import EliminationOrdering, find_seo, maximal_d2cs_paper, maximal_d2cs_reference, verify_seo

log = logging.getLogger("d2cs")


def _read(path: str) -> Graph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_graph(text)


def _line(s) -> str:
    return " ".join(map(str, sorted_tuple(s)))


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise GraphError(f"expected comma-separated integers, got {text!r}") from None


def cmd_gen(args) -> int:
    spec = FamilySpec(args.family, parse_params(args.params), args.seed)
    _write(format_graph(spec.build()), args.out)
    return 0


def cmd_count_formula(args) -> int:
    params = parse_params(args.params)
    record: dict = {"schema": reconcile.SCHEMA_ID, "family": args.family, "params": list(params)}
    if args.family == "kary-bounds":
        b = formulas.kary_bounds(*params)
        print(f"{b.lower} {b.upper} {b.fmax}")
        record.update(lower=b.lower, upper=b.upper, fmax=b.fmax, disputed=False)
    else:
        value = formulas.evaluate(args.family, params)
        print(value)
        record.update(value=value, disputed=args.family in formulas.DISPUTED)
        if args.family == "split" and params[1:] == (1,):
            log.warning("r = 1 lies outside the split-graph formula's stated hypothesis r > 1")
    print(json.dumps(record))
    return 0


def cmd_enum_all(args) -> int:
    g = _read(args.input)
    emit = (lambda s: print(_line(s))) if args.emit_sets else None
    total = enum_all_d2cs(g, emit)
    if args.emit_sets:
        print(f"# strata size0=1 size1={g.n} size2={g.m}")
    print(total)
    return 0


def cmd_oracle(args) -> int:
    g = _read(args.input)
    if args.mode == "maximal":
        for s in oracle_maximal(g, limit=args.limit):
            print(_line(s))
        return 0
    if args.mode == "maximum":
        print(_line(oracle_maximum(g, limit=args.limit)))
        return 0
    res = oracle_count(g, collect=args.emit_sets, limit=args.limit)
    for s in res.sets or ():
        print(_line(s) if s else "")
    print("# by_size " + " ".join(map(str, res.by_size)))
    print(res.total)
    return 0


def cmd_maximal_schordal(args) -> int:
    g = _read(args.input)
    if args.mode == "reference":
        for s in maximal_d2cs_reference(g):
            print(_line(s))
        return 0
    ordering = EliminationOrdering.of(g, _ints(args.order)) if args.order else find_seo(g)
    if ordering is None:
        raise GraphError("graph is not strongly chordal: no strong elimination ordering")
    # position i -> original vertex id
    print("# ordering " + " ".join(map(str, ordering.order)))
    sets = maximal_d2cs_paper(g, ordering, dedup=not args.raw)
    for s in sets if args.raw else canonical(sets):
        print(_line(s))
    return 0


def cmd_seo_check(args) -> int:
    g = _read(args.input)
    violation = verify_seo(g, _ints(args.order))
    if violation is None:
        print("OK")
        return 0
    print(violation.describe())
    return 1


def cmd_seo_find(args) -> int:
    g = _read(args.input)
    ordering = find_seo(g)
    if ordering is None:
        print("NONE")
        return 1
    print(",".join(map(str, ordering.order)))
    return 0


def cmd_reconcile(args) -> int:
    families = args.family or []
    params = args.params or []
    if len(families) != len(params):
        raise GraphError("each --family needs a matching --params")
    requests: list[reconcile.Request] = []
    for name in args.preset or ([] if families else ["paper"]):
        requests += reconcile.PRESETS[name]()
    kind = "maximal-schordal" if args.mode == "schordal" else "count"
    for fam, text in zip(families, params):
        for p in reconcile.parse_ranges(text):
            requests.append(reconcile.Request(FamilySpec(fam, p, args.seed), kind))
    report = reconcile.run(reconcile.ReconcileConfig(requests, args.limit))
    _write(reconcile.dumps(report), args.out)
    for fam, counts in report["summary"].items():
        print(f"{fam}: " + " ".join(f"{k}={v}" for k, v in counts.items()), file=sys.stderr)
    mismatched = any(e["verdict"] == "MISMATCH" for e in report["entries"])
    return 1 if args.strict and mismatched else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="d2cs", description="Count and enumerate distance-2 clique sets.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a generated graph as an edge list")
    p.add_argument("--family", required=True)
    p.add_argument("--params", required=True)
    p.add_argument("--seed", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("count-formula", help="evaluate a closed-form count")
    p.add_argument("--family", required=True, choices=sorted(formulas.FORMULAS) + ["kary-bounds"])
    p.add_argument("--params", required=True)
    p.set_defaults(func=cmd_count_formula)

    p = sub.add_parser("enum-all", help="count all D2CS via cliques of the square")
    p.add_argument("input")
    p.add_argument("--emit-sets", action="store_true")
    p.set_defaults(func=cmd_enum_all)

    p = sub.add_parser("oracle", help="brute-force over all subsets")
    p.add_argument("input")
    p.add_argument("--limit", type=int)
    p.add_argument("--mode", choices=["count", "maximal", "maximum"], default="count")
    p.add_argument("--emit-sets", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("maximal-schordal", help="maximal D2CS of a strongly chordal graph")
    p.add_argument("input")
    p.add_argument("--mode", choices=["paper", "reference"], default="reference")
    p.add_argument("--order", help="strong elimination ordering; found automatically if omitted")
    p.add_argument("--raw", action="store_true", help="print order with repeats (paper mode)")
    p.set_defaults(func=cmd_maximal_schordal)

    p = sub.add_parser("seo-check", help="verify a strong elimination ordering")
    p.add_argument("input")
    p.add_argument("--order", required=True)
    p.set_defaults(func=cmd_seo_check)

    p = sub.add_parser("seo-find", help="find a strong elimination ordering")
    p.add_argument("input")
    p.set_defaults(func=cmd_seo_find)

    p = sub.add_parser("reconcile", help="cross-check formulas and algorithms against the oracle")
    p.add_argument("--preset", action="append", choices=sorted(reconcile.PRESETS))
    p.add_argument("--family", action="append")
    p.add_argument("--params", action="append", help="per-family ranges, e.g. 2..8 or 1..4,1..3")
    p.add_argument("--mode", choices=["count", "schordal"], default="count")
    p.add_argument("--seed", type=int)
    p.add_argument("--limit", type=int)
    p.add_argument("--strict", action="store_true", help="exit 1 if any entry is a MISMATCH")
    p.add_argument("--out")
    p.set_defaults(func=cmd_reconcile)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (GraphError, OracleLimitError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
