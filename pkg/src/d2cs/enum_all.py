"""General D2CS enumeration through the graph square.

Every D2CS is a clique of the square, so listing the square's cliques of
size >= 3 and discarding those whose induced subgraph in ``g`` has diameter
above 2 yields all D2CS of size >= 3. Sizes 0, 1 and 2 contribute 1, n and m.
"""

from __future__ import annotations

from typing import Callable, Iterator

from .graph import Graph, GraphError, bit, components, iter_mask, square_masks


def _cliques(adj: tuple[int, ...], n: int) -> Iterator[list[int]]:
    # preorder DFS extending only by larger vertices: each clique once, lexicographic
    stack: list[tuple[list[int], int]] = []
    for v in range(n, 0, -1):
        stack.append(([v], adj[v] & ~((bit(v) << 1) - 1)))
    while stack:
        clique, cand = stack.pop()
        yield clique
        children = []
        while cand:
            low = cand & -cand
            cand ^= low
            w = low.bit_length()
            children.append((clique + [w], cand & adj[w]))
        stack.extend(reversed(children))


def enum_cliques_min3(g: Graph) -> Iterator[frozenset[int]]:
    """All cliques of ``g`` with at least 3 vertices, lexicographic by sorted members."""
    for clique in _cliques(g.adj, g.n):
        if len(clique) >= 3:
            yield frozenset(clique)


def d2cs_filter(g: Graph, candidate: frozenset[int]) -> bool:
    """Depth-capped BFS inside ``candidate``; assumes it is a clique of the square."""
    inside = 0
    for v in candidate:
        inside |= bit(v)
    for v in candidate:
        seen = bit(v)
        frontier = seen
        for _ in range(2):
            nxt = 0
            for u in iter_mask(frontier):
                nxt |= g.adj[u]
            frontier = nxt & inside & ~seen
            seen |= frontier
        if seen != inside:
            return False
    return True


def enum_all_d2cs(g: Graph, emit: Callable[[frozenset[int]], None] | None = None) -> int:
    """Total number of D2CS of a connected graph; ``emit`` sees each one of size >= 3."""
    comps = components(g)
    if len(comps) > 1:
        sizes = ", ".join(str(len(c)) for c in comps)
        raise GraphError(f"graph is disconnected: {len(comps)} components of sizes {sizes}")
    sq = Graph(g.n, square_masks(g))
    kept = 0
    for s in enum_cliques_min3(sq):
        if d2cs_filter(g, s):
            kept += 1
            if emit is not None:
                emit(s)
    return kept + g.n + g.m + 1
