"""Run the literal strongly-chordal scan under every strong elimination ordering.

Counts orderings where the scan prints a set that is not maximal ("extra")
and where it misses a maximal set ("missed"). All n! permutations are tried,
so keep n small.

    python scripts/seo_audit.py [--max-n 7] [--random 500] [--seed 1]
"""

import argparse
import random
from itertools import combinations, permutations

from d2cs.generators import gen_all_trees, gen_complete, gen_split_graph
from d2cs.graph import Graph, is_connected
from d2cs.schordal import find_seo, maximal_d2cs_paper, maximal_d2cs_reference, verify_seo


def random_cases(count, max_n, seed):
    rng = random.Random(seed)
    found = 0
    while found < count:
        n = rng.randint(2, max_n)
        p = rng.uniform(0.2, 0.8)
        g = Graph.from_edges(n, [e for e in combinations(range(1, n + 1), 2) if rng.random() < p])
        if is_connected(g) and find_seo(g) is not None:
            found += 1
            yield f"random#{found}", g


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--random", type=int, default=300)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    cases = [(f"tree{n}#{i}", t) for n in range(2, args.max_n + 1) for i, t in enumerate(gen_all_trees(n))]
    cases += [(f"complete{n}", gen_complete(n)) for n in range(2, min(args.max_n, 6) + 1)]
    cases += [(f"split{k},{r}", gen_split_graph(k, r)) for k in (2, 3) for r in (1, 2) if k * (r + 1) <= args.max_n]
    cases += list(random_cases(args.random, args.max_n, args.seed))
    orderings = extra = missed = 0
    first = None
    for name, g in cases:
        ref = set(maximal_d2cs_reference(g))
        for p in permutations(g.vertices):
            if verify_seo(g, p) is not None:
                continue
            orderings += 1
            got = set(maximal_d2cs_paper(g, p))
            extra += bool(got - ref)
            missed += bool(ref - got)
            if got != ref and first is None:
                first = (name, g.edges(), p, sorted(map(sorted, got - ref)), sorted(map(sorted, ref - got)))
    print(f"{len(cases)} graphs, {orderings} strong orderings: {extra} with extra sets, {missed} with missed sets")
    if first:
        name, edges, p, ex, ms = first
        print(f"first disagreement: {name} edges={edges} order={p} extra={ex} missed={ms}")


if __name__ == "__main__":
    main()
