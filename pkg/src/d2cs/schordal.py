"""Strong elimination orderings and maximal D2CS of strongly chordal graphs.

An ordering v_1..v_n is strong when each v_i is simplicial in
G_i = G[v_i..v_n] and, for i < j < k with v_j, v_k in N_i[v_i],
N_i[v_j] is a subset of N_i[v_k].
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .graph import Graph, GraphError, bit, from_mask, is_connected, iter_mask
from .oracle import canonical

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class EliminationOrdering:
    """``order[i - 1]`` is the vertex eliminated i-th; ``position[v]`` inverts it."""

    order: tuple[int, ...]

    @classmethod
    def of(cls, g: Graph, order: Sequence[int]) -> "EliminationOrdering":
        order = tuple(order)
        if sorted(order) != list(g.vertices):
            raise GraphError(f"ordering {list(order)} is not a permutation of 1..{g.n}")
        return cls(order)

    @property
    def position(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.order, 1)}


class ViolationKind(Enum):
    NOT_SIMPLICIAL = "NOT_SIMPLICIAL"
    STRONG_CONDITION = "STRONG_CONDITION"


@dataclass(frozen=True)
class SeoViolation:
    """Positions are 1-based indices into the ordering.

    NOT_SIMPLICIAL: ``i`` is the position, ``vertices`` a non-adjacent pair in N_i[v_i].
    STRONG_CONDITION: ``(i, j, k)`` positions, ``vertices`` = (v_i, v_j, v_k, w)
    with w in N_i[v_j] but not in N_i[v_k].
    """

    kind: ViolationKind
    positions: tuple[int, ...]
    vertices: tuple[int, ...]

    def describe(self) -> str:
        if self.kind is ViolationKind.NOT_SIMPLICIAL:
            (i,) = self.positions
            a, b = self.vertices
            return f"NOT_SIMPLICIAL i={i}: neighbors {a} and {b} of the i-th vertex are not adjacent"
        i, j, k = self.positions
        vi, vj, vk, w = self.vertices
        return (f"STRONG_CONDITION i={i} j={j} k={k}: vertex {w} is in N_i[{vj}] "
                f"but not in N_i[{vk}] (both neighbors of {vi})")


def _closed(g: Graph, v: int, within: int) -> int:
    return (g.adj[v] & within) | bit(v)


def verify_seo(g: Graph, ordering: Sequence[int] | EliminationOrdering) -> SeoViolation | None:
    """None if the ordering is strong, else the first violation by (i, j, k)."""
    ordering = ordering if isinstance(ordering, EliminationOrdering) else EliminationOrdering.of(g, ordering)
    order = ordering.order
    pos = ordering.position
    remaining = g.full_mask
    for i, vi in enumerate(order, 1):
        nbrs = sorted(iter_mask(g.adj[vi] & remaining), key=pos.__getitem__)
        for a_idx, a in enumerate(nbrs):
            for b in nbrs[a_idx + 1:]:
                if not g.has_edge(a, b):
                    return SeoViolation(ViolationKind.NOT_SIMPLICIAL, (i,), (a, b))
        for a_idx, vj in enumerate(nbrs):
            nj = _closed(g, vj, remaining)
            for vk in nbrs[a_idx + 1:]:
                missing = nj & ~_closed(g, vk, remaining)
                if missing:
                    w = (missing & -missing).bit_length()
                    return SeoViolation(ViolationKind.STRONG_CONDITION,
                                        (i, pos[vj], pos[vk]), (vi, vj, vk, w))
        remaining &= ~bit(vi)
    return None


class _NotStronglyChordal(Exception):
    pass


def _is_simple(g: Graph, v: int, within: int) -> bool:
    hoods = sorted((_closed(g, u, within) for u in iter_mask(_closed(g, v, within))), key=int.bit_count)
    return all(a & b == a for a, b in zip(hoods, hoods[1:]))


def find_seo(g: Graph) -> EliminationOrdering | None:
    """Strong elimination ordering built from simple-vertex removals, or None.

    Removing any simple vertex keeps a strongly chordal graph strongly chordal,
    so an induced subgraph without a simple vertex proves there is no ordering.
    Among simple vertices the search backtracks on the ordering constraint,
    which the first greedy pass almost always satisfies.
    """
    placed: list[int] = []

    def consistent(x: int, remaining: int) -> bool:
        suffix = remaining
        for i in range(len(placed) - 1, -1, -1):
            vi = placed[i]
            suffix |= bit(vi)
            if not g.has_edge(vi, x):
                continue
            nx = _closed(g, x, suffix)
            for w in iter_mask(g.adj[vi] & remaining & ~bit(x)):
                if nx & ~_closed(g, w, suffix):
                    return False
        return True

    def search(remaining: int) -> bool:
        if not remaining:
            return True
        simple = [v for v in iter_mask(remaining) if _is_simple(g, v, remaining)]
        if not simple:
            raise _NotStronglyChordal
        for x in simple:
            if consistent(x, remaining):
                placed.append(x)
                if search(remaining & ~bit(x)):
                    return True
                placed.pop()
        return False

    try:
        found = search(g.full_mask)
    except _NotStronglyChordal:
        return None
    return EliminationOrdering(tuple(placed)) if found else None


def relabel(g: Graph, ordering: EliminationOrdering) -> Graph:
    """Copy of ``g`` where vertex i is the i-th vertex of ``ordering``."""
    pos = ordering.position
    return Graph.from_edges(g.n, [(pos[u], pos[v]) for u, v in g.edges()])


def _max_or_none(mask: int) -> int | None:
    return mask.bit_length() or None


def _below(v: int) -> int:
    return bit(v) - 1


def maximal_d2cs_paper(g: Graph, ordering: Sequence[int] | EliminationOrdering,
                       *, dedup: bool = False) -> list[frozenset[int]]:
    """Linear-scan maximal-D2CS listing over a strong elimination ordering.

    Runs on the graph relabeled by ``ordering`` and returns sets in the
    original vertex ids, in print order. Repeated prints are kept unless
    ``dedup`` is set. The set difference on each step costs O(deg).
    """
    ordering = ordering if isinstance(ordering, EliminationOrdering) else EliminationOrdering.of(g, ordering)
    violation = verify_seo(g, ordering)
    if violation is not None:
        raise GraphError(f"not a strong elimination ordering: {violation.describe()}")
    if not is_connected(g):
        raise GraphError("graph must be connected")
    h = relabel(g, ordering)
    if h.n == 0 or not h.adj[1]:
        raise GraphError("vertex 1 has no neighbors; the scan needs a connected graph with an edge")

    printed: list[int] = []
    u = _max_or_none(h.adj[1])
    printed.append(h.closed_mask(u))
    for i in range(2, h.n + 1):
        u_prime = _max_or_none(h.adj[i] & _below(i))
        p = None if u_prime is None else _max_or_none(h.adj[u_prime] & ~_below(u_prime + 1))
        s = _max_or_none(h.adj[i] & ~_below(i + 1))
        if s is None:
            log.info("i=%d has no larger neighbor; nothing to print", i)
            continue
        if p is None or h.closed_mask(s) & ~h.closed_mask(p):
            printed.append(h.closed_mask(s))

    out = []
    seen = set()
    for mask in printed:
        if dedup and mask in seen:
            continue
        seen.add(mask)
        out.append(frozenset(ordering.order[v - 1] for v in iter_mask(mask)))
    return out


def maximal_d2cs_reference(g: Graph) -> list[frozenset[int]]:
    """Inclusion-maximal closed neighborhoods, canonically sorted."""
    hoods = sorted({g.closed_mask(v) for v in g.vertices}, key=lambda s: -s.bit_count())
    kept: list[int] = []
    for s in hoods:
        if not any(s & t == s for t in kept):
            kept.append(s)
    return canonical(from_mask(s) for s in kept)


def count_maximal_schordal(g: Graph) -> int:
    return len(maximal_d2cs_reference(g))
