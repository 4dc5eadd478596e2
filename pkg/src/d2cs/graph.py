"""Simple undirected graphs on vertices 1..n with bit-set adjacency.

Vertex ``v`` maps to bit ``v - 1`` of a vertex-set mask, so ascending mask
order and ascending vertex order agree.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator

INFINITE = math.inf


class GraphError(ValueError):
    """Malformed graph or out-of-range vertex."""


def bit(v: int) -> int:
    return 1 << (v - 1)


def iter_mask(mask: int) -> Iterator[int]:
    """Yield the vertices of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length()
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= bit(v)
    return mask


def from_mask(mask: int) -> frozenset[int]:
    return frozenset(iter_mask(mask))


def sorted_tuple(s: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(s))


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    ``adj[v]`` is the neighbor mask of vertex ``v``; ``adj[0]`` is unused.
    Build instances with :meth:`from_edges`, which validates the input.
    """

    n: int
    adj: tuple[int, ...] = field(repr=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        adj = [0] * (n + 1)
        for u, v in edges:
            for x in (u, v):
                if not 1 <= x <= n:
                    raise GraphError(f"vertex {x} outside 1..{n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if adj[u] & bit(v):
                raise GraphError(f"duplicate edge {min(u, v)}-{max(u, v)}")
            adj[u] |= bit(v)
            adj[v] |= bit(u)
        return cls(n, tuple(adj))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in self.vertices for v in iter_mask(self.adj[u]) if u < v]

    def neighbors(self, v: int) -> list[int]:
        self.check_vertex(v)
        return list(iter_mask(self.adj[v]))

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] & bit(v))

    def closed_mask(self, v: int) -> int:
        return self.adj[v] | bit(v)

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 1 <= v <= self.n):
            raise GraphError(f"vertex {v!r} outside 1..{self.n}")

    def check_set(self, s: Iterable[int]) -> int:
        """Validate ``s`` against this graph and return it as a mask."""
        mask = 0
        for v in s:
            self.check_vertex(v)
            mask |= bit(v)
        return mask


def bfs_distances(g: Graph, source: int) -> dict[int, float]:
    """Shortest-path lengths from ``source``; unreachable vertices map to ``INFINITE``."""
    g.check_vertex(source)
    dist: dict[int, float] = {v: INFINITE for v in g.vertices}
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in iter_mask(g.adj[u]):
            if dist[w] == INFINITE:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Return ``(g[s], labels)`` where new vertex ``i`` is old vertex ``labels[i - 1]``."""
    labels = tuple(iter_mask(g.check_set(s)))
    index = {v: i for i, v in enumerate(labels, 1)}
    edges = [(index[u], index[v]) for u, v in g.edges() if u in index and v in index]
    return Graph.from_edges(len(labels), edges), labels


def diameter(g: Graph) -> float:
    """Largest pairwise distance; 0 for graphs with at most one vertex."""
    best: float = 0
    for v in g.vertices:
        best = max(best, max(bfs_distances(g, v).values()))
        if best == INFINITE:
            break
    return best


def components(g: Graph) -> list[list[int]]:
    seen = 0
    comps = []
    for v in g.vertices:
        if seen & bit(v):
            continue
        comp = bit(v)
        frontier = comp
        while frontier:
            nxt = 0
            for u in iter_mask(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(list(iter_mask(comp)))
    return comps


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def square_masks(g: Graph) -> tuple[int, ...]:
    """Neighbor masks of the square: everything within two steps, minus the vertex."""
    sq = [0] * (g.n + 1)
    for v in g.vertices:
        reach = g.adj[v]
        for u in iter_mask(g.adj[v]):
            reach |= g.adj[u]
        sq[v] = reach & ~bit(v)
    return tuple(sq)


def graph_square(g: Graph) -> Graph:
    return Graph(g.n, square_masks(g))


def is_d2cs_mask(adj: tuple[int, ...], s: int) -> bool:
    """Depth-2 reachability check of every member inside ``s``."""
    rest = s
    while rest:
        low = rest & -rest
        rest ^= low
        near = adj[low.bit_length()] & s
        reach = near | low
        while near:
            lb = near & -near
            near ^= lb
            reach |= adj[lb.bit_length()]
        if reach & s != s:
            return False
    return True


def is_d2cs(g: Graph, s: Iterable[int]) -> bool:
    """True iff the subgraph induced by ``s`` has diameter at most 2."""
    return is_d2cs_mask(g.adj, g.check_set(s))


def closed_neighborhood(g: Graph, v: int) -> frozenset[int]:
    g.check_vertex(v)
    return from_mask(g.closed_mask(v))
