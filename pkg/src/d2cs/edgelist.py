"""Edge-list files: a header ``n m`` then ``m`` lines ``u v`` with u < v.

Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

from pathlib import Path

from .graph import Graph, GraphError


def parse_graph(text: str) -> Graph:
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected two integers, got {line!r}")
        try:
            rows.append((lineno, int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphError(f"line {lineno}: expected two integers, got {line!r}") from None
    if not rows:
        raise GraphError("missing 'n m' header")
    _, n, m = rows[0]
    edges = rows[1:]
    if len(edges) != m:
        raise GraphError(f"header declares {m} edges but {len(edges)} edge lines follow")
    for lineno, u, v in edges:
        if u == v:
            raise GraphError(f"line {lineno}: self-loop at vertex {u}")
        if u > v:
            raise GraphError(f"line {lineno}: edge must be written as 'u v' with u < v, got {u} {v}")
    try:
        return Graph.from_edges(n, [(u, v) for _, u, v in edges])
    except GraphError as exc:
        raise GraphError(f"invalid graph: {exc}") from None


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text())


def write_graph(g: Graph, path: str | Path) -> None:
    Path(path).write_text(format_graph(g))
