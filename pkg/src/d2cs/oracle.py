"""Brute-force ground truth: test every vertex subset for induced diameter <= 2."""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .graph import Graph, from_mask, is_d2cs_mask, sorted_tuple, square_masks

DEFAULT_LIMIT = 24
LIMIT_ENV = "D2CS_ORACLE_LIMIT"


class OracleLimitError(RuntimeError):
    pass


def oracle_limit(limit: int | None = None) -> int:
    if limit is not None:
        return limit
    env = os.environ.get(LIMIT_ENV)
    return int(env) if env else DEFAULT_LIMIT


def _guard(g: Graph, limit: int | None) -> None:
    cap = oracle_limit(limit)
    if g.n > cap:
        raise OracleLimitError(
            f"oracle refuses n={g.n}: above the vertex limit {cap} "
            f"(pass a larger limit or set {LIMIT_ENV})"
        )


@dataclass
class OracleResult:
    total: int
    by_size: list[int]
    sets: list[frozenset[int]] | None = field(default=None, repr=False)


def _d2cs_masks(g: Graph, prune: bool):
    """Yield every D2CS mask in ascending order.

    With ``prune`` a subset must first be a clique of the square, which every
    D2CS is; this only skips the BFS check, never a candidate.
    """
    adj = g.adj
    sq = square_masks(g) if prune else None
    for s in range(1 << g.n):
        if sq is not None:
            ok = True
            rest = s
            while rest:
                low = rest & -rest
                rest ^= low
                if s & ~sq[low.bit_length()] & ~low:
                    ok = False
                    break
            if not ok:
                continue
        if is_d2cs_mask(adj, s):
            yield s


def oracle_count(g: Graph, collect: bool = False, *, limit: int | None = None,
                 prune: bool = True) -> OracleResult:
    """Count (and optionally list, in ascending bitmask order) all D2CS of ``g``."""
    _guard(g, limit)
    by_size = [0] * (g.n + 1)
    sets = [] if collect else None
    for s in _d2cs_masks(g, prune):
        by_size[s.bit_count()] += 1
        if sets is not None:
            sets.append(from_mask(s))
    return OracleResult(sum(by_size), by_size, sets)


def _maximal_masks(g: Graph, prune: bool) -> list[int]:
    found = sorted(_d2cs_masks(g, prune), key=lambda s: -s.bit_count())
    maximal: list[int] = []
    for s in found:
        # anything not maximal sits inside a larger maximal set already kept
        if not any(s & t == s for t in maximal):
            maximal.append(s)
    return maximal


def canonical(family) -> list[frozenset[int]]:
    """Sort a family of vertex sets lexicographically by their sorted members."""
    return [frozenset(t) for t in sorted({sorted_tuple(s) for s in family})]


def oracle_maximal(g: Graph, *, limit: int | None = None, prune: bool = True) -> list[frozenset[int]]:
    _guard(g, limit)
    return canonical(from_mask(s) for s in _maximal_masks(g, prune))


def oracle_maximum(g: Graph, *, limit: int | None = None, prune: bool = True) -> frozenset[int]:
    """A largest D2CS; among ties the one with the smallest mask."""
    _guard(g, limit)
    best = max(_maximal_masks(g, prune), key=lambda s: (s.bit_count(), -s))
    return from_mask(best)

