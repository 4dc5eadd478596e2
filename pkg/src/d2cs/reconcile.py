"""Cross-check closed forms and the strongly chordal scan against the oracle.

Mismatches are recorded as findings; nothing here raises on disagreement.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product

import jsonschema

from . import formulas
from .enum_all import enum_all_d2cs
from .generators import FamilySpec, gen_all_trees
from .graph import GraphError, is_connected, sorted_tuple
from .oracle import OracleLimitError, oracle_count, oracle_limit, oracle_maximal
from .schordal import find_seo, maximal_d2cs_paper, maximal_d2cs_reference

SCHEMA_ID = "d2cs/1"

_SETS = {"type": "array", "items": {"type": "array", "items": {"type": "integer", "minimum": 1}}}
_INT_OR_NULL = {"type": ["integer", "null"]}

REPORT_SCHEMA = {
    "type": "object",
    "required": ["schema", "oracle_limit", "entries", "summary"],
    "properties": {
        "schema": {"const": SCHEMA_ID},
        "oracle_limit": {"type": "integer"},
        "entries": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["kind", "family", "params", "verdict", "reason", "notes"],
                "properties": {
                    "kind": {"enum": ["count", "maximal-schordal"]},
                    "family": {"type": "string"},
                    "params": {"type": "array", "items": {"type": "number"}},
                    "seed": _INT_OR_NULL,
                    "verdict": {"enum": ["MATCH", "MISMATCH", "SKIPPED"]},
                    "reason": {"type": ["string", "null"]},
                    "notes": {"type": "string"},
                    "formula_value": _INT_OR_NULL,
                    "oracle_value": _INT_OR_NULL,
                    "disputed": {"type": "boolean"},
                    "ordering": {"type": ["array", "null"], "items": {"type": "integer"}},
                    "paper_printed": _INT_OR_NULL,
                    "paper_sets": _SETS,
                    "reference_sets": _SETS,
                    "oracle_sets": _SETS,
                    "reference_matches_oracle": {"type": ["boolean", "null"]},
                    "paper_only": _SETS,
                    "reference_only": _SETS,
                },
                "allOf": [
                    {
                        "if": {"properties": {"kind": {"const": "count"}}},
                        "then": {"required": ["formula_value", "oracle_value", "disputed"]},
                    },
                    {
                        "if": {"properties": {"kind": {"const": "maximal-schordal"}}},
                        "then": {"required": ["ordering", "paper_sets", "reference_sets", "oracle_sets",
                                              "reference_matches_oracle", "paper_only", "reference_only"]},
                    },
                    {
                        "if": {"properties": {"kind": {"const": "count"}, "verdict": {"const": "MISMATCH"}}},
                        "then": {"properties": {"formula_value": {"type": "integer"},
                                                "oracle_value": {"type": "integer"}}},
                    },
                ],
            },
        },
        "summary": {"type": "object"},
    },
}


def validate_report(report: dict) -> None:
    jsonschema.validate(report, REPORT_SCHEMA)


@dataclass(frozen=True)
class Request:
    spec: FamilySpec
    kind: str = "count"


@dataclass
class ReconcileConfig:
    requests: list[Request] = field(default_factory=list)
    limit: int | None = None


def _base(req: Request) -> dict:
    out = {"kind": req.kind, "family": req.spec.family, "params": list(req.spec.params)}
    if req.spec.family == "random":
        out["seed"] = req.spec.seed
    return out


def _shift_note(family: str, params: tuple, value: int, source: str = "oracle") -> str:
    if len(params) != 1:
        return ""
    (n,) = params
    hits = []
    for d in (-3, -2, -1, 1, 2, 3):
        try:
            if formulas.evaluate(family, (n + d,)) == value:
                hits.append(n + d)
        except formulas.FormulaError:
            pass
    return f"{source} value equals the formula at n={hits}" if hits else ""


def reconcile_count(req: Request, limit: int) -> dict:
    spec = req.spec
    entry = _base(req)
    entry.update(formula_value=None, oracle_value=None,
                 disputed=spec.family in formulas.DISPUTED,
                 verdict="SKIPPED", reason=None, notes="")
    try:
        entry["formula_value"] = formulas.evaluate(spec.family, spec.params)
    except formulas.FormulaError as exc:
        entry["reason"] = f"formula undefined: {exc}"
    g = spec.build()
    try:
        entry["oracle_value"] = oracle_count(g, limit=limit).total
    except OracleLimitError as exc:
        entry["reason"] = str(exc)
        if is_connected(g):
            alt = enum_all_d2cs(g)
            shift = _shift_note(spec.family, spec.params, alt, "enum-all")
            entry["notes"] = f"enum-all count {alt}" + (f"; {shift}" if shift else "")
        return entry
    if entry["formula_value"] is not None:
        match = entry["formula_value"] == entry["oracle_value"]
        entry["verdict"] = "MATCH" if match else "MISMATCH"
        if not match:
            entry["notes"] = _shift_note(spec.family, spec.params, entry["oracle_value"])
    else:
        entry["notes"] = _shift_note(spec.family, spec.params, entry["oracle_value"])
    return entry


def _as_lists(family) -> list[list[int]]:
    return [list(sorted_tuple(s)) for s in family]


def reconcile_schordal(req: Request, limit: int) -> dict:
    g = req.spec.build()
    entry = _base(req)
    entry.update(ordering=None, paper_printed=None, paper_sets=[], reference_sets=[], oracle_sets=[],
                 reference_matches_oracle=None, paper_only=[], reference_only=[],
                 verdict="SKIPPED", reason=None, notes="")
    reference = maximal_d2cs_reference(g)
    entry["reference_sets"] = _as_lists(reference)
    try:
        oracle = oracle_maximal(g, limit=limit)
        entry["oracle_sets"] = _as_lists(oracle)
        entry["reference_matches_oracle"] = set(oracle) == set(reference)
    except OracleLimitError as exc:
        entry["notes"] = str(exc)
    if not is_connected(g):
        entry["reason"] = "graph is disconnected"
        return entry
    ordering = find_seo(g)
    if ordering is None:
        entry["reason"] = "graph is not strongly chordal"
        return entry
    entry["ordering"] = list(ordering.order)
    try:
        printed = maximal_d2cs_paper(g, ordering)
    except GraphError as exc:
        entry["reason"] = f"scan not applicable: {exc}"
        return entry
    paper = set(printed)
    entry["paper_printed"] = len(printed)
    entry["paper_sets"] = _as_lists(sorted(paper, key=sorted_tuple))
    entry["paper_only"] = _as_lists(sorted(paper - set(reference), key=sorted_tuple))
    entry["reference_only"] = _as_lists(sorted(set(reference) - paper, key=sorted_tuple))
    entry["verdict"] = "MATCH" if paper == set(reference) else "MISMATCH"
    return entry


def run(config: ReconcileConfig) -> dict:
    limit = oracle_limit(config.limit)
    entries = []
    for req in config.requests:
        check = reconcile_schordal if req.kind == "maximal-schordal" else reconcile_count
        entries.append(check(req, limit))
    summary: dict[str, dict[str, int]] = {}
    for e in entries:
        counts = summary.setdefault(e["family"], {"MATCH": 0, "MISMATCH": 0, "SKIPPED": 0})
        counts[e["verdict"]] += 1
    report = {"schema": SCHEMA_ID, "oracle_limit": limit, "entries": entries, "summary": summary}
    validate_report(report)
    return report


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def parse_ranges(text: str) -> list[tuple]:
    """``"1..4,2"`` -> [(1, 2), (2, 2), (3, 2), (4, 2)]; ranges are inclusive."""
    axes = []
    for tok in filter(None, (t.strip() for t in text.split(","))):
        if ".." in tok:
            lo, hi = tok.split("..", 1)
            axes.append(range(int(lo), int(hi) + 1))
        else:
            try:
                axes.append([int(tok)])
            except ValueError:
                try:
                    axes.append([float(tok)])
                except ValueError:
                    raise GraphError(f"bad parameter {tok!r}") from None
    return list(product(*axes))


def _counts(family: str, params) -> list[Request]:
    return [Request(FamilySpec(family, tuple(p))) for p in params]


def paper_preset() -> list[Request]:
    """Every closed form at oracle-sized parameters."""
    reqs = []
    reqs += _counts("star", [(n,) for n in range(0, 13)])
    reqs += _counts("complete", [(n,) for n in range(1, 13)])
    reqs += _counts("empty", [(n,) for n in range(1, 9)])
    reqs += _counts("ladder", [(n,) for n in range(1, 9)])
    reqs += _counts("binomial", [(k,) for k in range(0, 5)])
    reqs += _counts("split", [(k, r) for k in range(1, 5) for r in range(1, 4) if k * (r + 1) <= 16])
    reqs += _counts("kary", [(2, 1), (2, 2), (3, 1), (3, 2), (2, 3)])
    reqs += _counts("fibonacci", [(n,) for n in range(2, 9)])
    reqs += _counts("binary-fibonacci", [(n,) for n in range(0, 7)])
    reqs += _counts("ktree", [(n, k) for k in range(1, 4) for n in range(k + 1, 11)])
    return reqs


def schordal_preset() -> list[Request]:
    """Tree catalog up to 10 vertices, complete graphs, small split graphs."""
    reqs = []
    for n in range(1, 11):
        reqs += [Request(FamilySpec("tree", (n, i)), "maximal-schordal") for i in range(len(gen_all_trees(n)))]
    reqs += [Request(FamilySpec("complete", (n,)), "maximal-schordal") for n in range(1, 9)]
    reqs += [Request(FamilySpec("split", (k, r)), "maximal-schordal") for k in range(1, 4) for r in range(1, 3)]
    return reqs


PRESETS = {"paper": paper_preset, "schordal": schordal_preset}
