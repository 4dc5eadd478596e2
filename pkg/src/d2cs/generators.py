"""Constructors for the graph families whose D2CS counts are studied.

Rooted trees are built as nested child lists (leftmost child first) and then
numbered breadth-first from the root, so the root is always vertex 1.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Callable, Sequence

from .graph import Graph, GraphError, is_connected

# A rooted ordered tree: the list of its children's subtrees.
Tree = tuple


def _bfs_number(root: Tree) -> Graph:
    edges = []
    queue = [(root, 1)]
    next_id = 2
    head = 0
    while head < len(queue):
        node, vid = queue[head]
        head += 1
        for child in node:
            edges.append((vid, next_id))
            queue.append((child, next_id))
            next_id += 1
    return Graph.from_edges(next_id - 1, edges)


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise GraphError(msg)


def gen_complete_kary_tree(k: int, h: int) -> Graph:
    _require(k >= 1 and h >= 0, f"k-ary tree needs k >= 1, h >= 0 (got k={k}, h={h})")
    edges = []
    level = [1]
    next_id = 2
    for _ in range(h):
        nxt = []
        for parent in level:
            for _ in range(k):
                edges.append((parent, next_id))
                nxt.append(next_id)
                next_id += 1
        level = nxt
    return Graph.from_edges(next_id - 1, edges)


@lru_cache(maxsize=None)
def _fib_tree(n: int) -> Tree:
    if n < 2:
        return ()
    # order n-2 tree becomes the new leftmost child of the order n-1 root
    return (_fib_tree(n - 2),) + _fib_tree(n - 1)


def gen_fibonacci_tree(n: int) -> Graph:
    _require(n >= 0, f"Fibonacci tree order must be >= 0, got {n}")
    return _bfs_number(_fib_tree(n))


@lru_cache(maxsize=None)
def _binary_fib_tree(n: int) -> Tree:
    if n == 0:
        return ()
    if n == 1:
        return ((),)
    return (_binary_fib_tree(n - 1), _binary_fib_tree(n - 2))


def gen_binary_fibonacci_tree(n: int) -> Graph:
    _require(n >= 0, f"binary Fibonacci tree order must be >= 0, got {n}")
    return _bfs_number(_binary_fib_tree(n))


@lru_cache(maxsize=None)
def _binomial_tree(k: int) -> Tree:
    if k == 0:
        return ()
    prev = _binomial_tree(k - 1)
    return (prev,) + prev


def gen_binomial_tree(k: int) -> Graph:
    _require(k >= 0, f"binomial tree order must be >= 0, got {k}")
    return _bfs_number(_binomial_tree(k))


def gen_split_graph(k: int, r: int) -> Graph:
    """Clique on 1..k; clique vertex i owns pendants k+(i-1)r+1 .. k+ir."""
    _require(k >= 1 and r >= 1, f"split graph needs k >= 1, r >= 1 (got k={k}, r={r})")
    edges = list(combinations(range(1, k + 1), 2))
    nxt = k + 1
    for i in range(1, k + 1):
        for _ in range(r):
            edges.append((i, nxt))
            nxt += 1
    return Graph.from_edges(k * (r + 1), edges)


def gen_ladder(n: int) -> Graph:
    """P_n x P_2 with top row 1..n and bottom row n+1..2n."""
    _require(n >= 1, f"ladder needs n >= 1, got {n}")
    edges = [(i, i + 1) for i in range(1, n)]
    edges += [(n + i, n + i + 1) for i in range(1, n)]
    edges += [(i, n + i) for i in range(1, n + 1)]
    return Graph.from_edges(2 * n, edges)


def gen_star(n: int) -> Graph:
    """K_{1,n} with center 1; ``n = 0`` gives K_1."""
    _require(n >= 0, f"star needs n >= 0, got {n}")
    return Graph.from_edges(n + 1, [(1, i) for i in range(2, n + 2)])


def gen_complete(n: int) -> Graph:
    _require(n >= 1, f"complete graph needs n >= 1, got {n}")
    return Graph.from_edges(n, combinations(range(1, n + 1), 2))


def gen_empty(n: int) -> Graph:
    _require(n >= 1, f"empty graph needs n >= 1, got {n}")
    return Graph.from_edges(n, [])


def gen_path(n: int) -> Graph:
    _require(n >= 1, f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def gen_cycle(n: int) -> Graph:
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def gen_ktree(n: int, k: int) -> Graph:
    """Path-like k-tree: K_{k+1}, then vertex i joins i-k .. i-1."""
    _require(k >= 1 and n >= k + 1, f"k-tree needs n >= k+1 >= 2 (got n={n}, k={k})")
    edges = list(combinations(range(1, k + 2), 2))
    for i in range(k + 2, n + 1):
        edges += [(j, i) for j in range(i - k, i)]
    return Graph.from_edges(n, edges)


def gen_random_connected(n: int, p: float, seed: int) -> Graph:
    """G(n, p) redrawn until connected. Deterministic in ``seed``."""
    _require(n >= 1, f"random graph needs n >= 1, got {n}")
    _require(0.0 <= p <= 1.0, f"edge probability must lie in [0, 1], got {p}")
    _require(n == 1 or p > 0.0, "p = 0 with n > 1 can never be connected")
    rng = random.Random(seed)
    pairs = list(combinations(range(1, n + 1), 2))
    while True:
        g = Graph.from_edges(n, [e for e in pairs if rng.random() < p])
        if is_connected(g):
            return g


def _canon(adj: list[list[int]], root: int, parent: int) -> str:
    return "(" + "".join(sorted(_canon(adj, c, root) for c in adj[root] if c != parent)) + ")"


def _tree_key(n: int, edges: list[tuple[int, int]]) -> str:
    """AHU encoding rooted at the center(s); equal keys iff isomorphic."""
    adj: list[list[int]] = [[] for _ in range(n + 1)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    deg = [len(a) for a in adj]
    layer = [v for v in range(1, n + 1) if deg[v] <= 1]
    left = n
    while left > 2:
        left -= len(layer)
        nxt = []
        for v in layer:
            for w in adj[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return min(_canon(adj, c, 0) for c in layer)


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    if n == 1:
        return ((),)
    found: dict[str, tuple[tuple[int, int], ...]] = {}
    for edges in _trees(n - 1):
        for v in range(1, n):
            grown = list(edges) + [(v, n)]
            found.setdefault(_tree_key(n, grown), tuple(grown))
    return tuple(found[key] for key in sorted(found))


def gen_all_trees(n: int) -> list[Graph]:
    """One representative per isomorphism class of trees on n vertices."""
    _require(n >= 1, f"tree catalog needs n >= 1, got {n}")
    return [Graph.from_edges(n, edges) for edges in _trees(n)]


def gen_tree(n: int, index: int) -> Graph:
    trees = gen_all_trees(n)
    _require(0 <= index < len(trees), f"tree index {index} outside 0..{len(trees) - 1} for n={n}")
    return trees[index]


@dataclass(frozen=True)
class Family:
    name: str
    arity: int
    build: Callable[..., Graph]


FAMILIES: dict[str, Family] = {
    f.name: f
    for f in [
        Family("kary", 2, gen_complete_kary_tree),
        Family("fibonacci", 1, gen_fibonacci_tree),
        Family("binary-fibonacci", 1, gen_binary_fibonacci_tree),
        Family("binomial", 1, gen_binomial_tree),
        Family("split", 2, gen_split_graph),
        Family("star", 1, gen_star),
        Family("ladder", 1, gen_ladder),
        Family("complete", 1, gen_complete),
        Family("empty", 1, gen_empty),
        Family("path", 1, gen_path),
        Family("cycle", 1, gen_cycle),
        Family("ktree", 2, gen_ktree),
        Family("random", 2, lambda n, p, seed: gen_random_connected(int(n), p, seed)),
        Family("tree", 2, gen_tree),
    ]
}


@dataclass(frozen=True)
class FamilySpec:
    """A generator family with its parameters; ``seed`` is used by ``random`` only."""

    family: str
    params: tuple = field(default=())
    seed: int | None = None

    def __post_init__(self) -> None:
        fam = FAMILIES.get(self.family)
        if fam is None:
            raise GraphError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        if len(self.params) != fam.arity:
            raise GraphError(f"family {self.family} takes {fam.arity} parameter(s), got {len(self.params)}")
        for i, p in enumerate(self.params):
            if not (self.family == "random" and i == 1) and not isinstance(p, int):
                raise GraphError(f"family {self.family} expects integer parameters, got {p!r}")

    def build(self) -> Graph:
        fam = FAMILIES[self.family]
        if self.family == "random":
            return fam.build(*self.params, 0 if self.seed is None else self.seed)
        return fam.build(*self.params)

    def to_json(self) -> dict:
        out: dict = {"family": self.family, "params": list(self.params)}
        if self.family == "random":
            out["seed"] = self.seed
        return out


def parse_params(text: str) -> tuple:
    """Parse ``"2,3"`` or ``"8,0.4"`` into a tuple of ints/floats."""
    out: list = []
    for tok in filter(None, (t.strip() for t in text.split(","))):
        try:
            out.append(int(tok))
        except ValueError:
            try:
                out.append(float(tok))
            except ValueError:
                raise GraphError(f"bad parameter {tok!r}") from None
    return tuple(out)


def build(family: str, params: Sequence, seed: int | None = None) -> Graph:
    return FamilySpec(family, tuple(params), seed).build()
