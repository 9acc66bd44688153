"""Write one graph6 line per isomorphism class of graphs on n vertices.

n <= 7 comes from the networkx graph atlas. n = 8 extends every 7-vertex
class by a vertex joined to each neighbourhood subset, then dedupes with
networkx isomorphism tests bucketed by Weisfeiler-Lehman hash.
"""

import argparse
import itertools
from collections import defaultdict
from pathlib import Path

import networkx as nx

KNOWN_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}


def atlas(n):
    return [g for g in nx.graph_atlas_g() if g.number_of_nodes() == n]


def extend(graphs):
    buckets = defaultdict(list)
    for g in graphs:
        n = g.number_of_nodes()
        for r in range(n + 1):
            for nbrs in itertools.combinations(range(n), r):
                h = g.copy()
                h.add_node(n)
                h.add_edges_from((n, x) for x in nbrs)
                key = (h.number_of_edges(), tuple(sorted(d for _, d in h.degree())),
                       nx.weisfeiler_lehman_graph_hash(h, iterations=3))
                if not any(nx.is_isomorphic(h, o) for o in buckets[key]):
                    buckets[key].append(h)
    return [g for b in buckets.values() for g in b]


def graph6(g):
    g = nx.convert_node_labels_to_integers(g)
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", type=Path, default=Path("crates/core/tests/fixtures"))
    ap.add_argument("sizes", type=int, nargs="+")
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for n in args.sizes:
        graphs = atlas(n) if n <= 7 else extend(atlas(7)) if n == 8 else None
        if graphs is None:
            raise SystemExit(f"n = {n} is not supported")
        lines = sorted(graph6(g) for g in graphs)
        assert len(lines) == KNOWN_COUNTS[n], (n, len(lines))
        (args.out / f"graphs{n}.g6").write_text("\n".join(lines) + "\n")
        print(f"n={n}: {len(lines)} graphs")


if __name__ == "__main__":
    main()
