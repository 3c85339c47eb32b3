#!/usr/bin/env python3
"""Regenerate the c-fat200-{1,2,5} DIMACS clique benchmarks.

A c-fat graph splits its vertices into consecutive clusters arranged on a
ring; two vertices are adjacent when their clusters are equal or
neighbouring on the ring. The cluster counts below reproduce the edge counts
of the published benchmark files (1534, 3235, 8473).
"""
import sys
from pathlib import Path

INSTANCES = {
    "c-fat200-1": (200, 37, 1534),
    "c-fat200-2": (200, 18, 3235),
    "c-fat200-5": (200, 7, 8473),
}


def cfat(n, clusters):
    sizes = [n // clusters + (1 if i < n % clusters else 0) for i in range(clusters)]
    owner = []
    for c, s in enumerate(sizes):
        owner.extend([c] * s)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            d = (owner[v] - owner[u]) % clusters
            if d in (0, 1, clusters - 1):
                edges.append((u, v))
    return edges


def main(out_dir):
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for name, (n, clusters, m) in INSTANCES.items():
        edges = cfat(n, clusters)
        assert len(edges) == m, (name, len(edges), m)
        with open(out / f"{name}.clq", "w") as f:
            f.write(f"c {name}: {clusters} clusters on a ring\n")
            f.write(f"p edge {n} {len(edges)}\n")
            for u, v in edges:
                f.write(f"e {u + 1} {v + 1}\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "crates/core/tests/data")
