"""Timing comparison of the two matching-oracle kernels.

The oracle enumerates perfect matchings by branching on the lowest
unmatched vertex; the compiled kernel keeps the vertex set in a machine
word.  This script times both on diamond and fortress dual graphs and
prints the speedup, double-checking that the values agree.

Usage:  python benchmarks/bench_oracle.py [--max-order 4] [--repeat 3]
"""

import argparse
import time

from tilecount import matching_gen_fn, oracle_backend
from tilecount.regions import build_aztec_graph, build_fortress_graph


def _time(fn, repeat):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        value = fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return value, best


def bench(graphs, repeat):
    rows = []
    for name, g in graphs:
        pure_value, pure_t = _time(
            lambda: matching_gen_fn(g, backend="pure"), repeat
        )
        if oracle_backend() == "compiled":
            fast_value, fast_t = _time(
                lambda: matching_gen_fn(g, backend="compiled"), repeat
            )
            assert fast_value == pure_value, name
        else:
            fast_t = None
        rows.append((name, g.vertex_count(), g.edge_count(), pure_t, fast_t))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-order", type=int, default=4)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    graphs = [
        (f"diamond-{n}", build_aztec_graph(n))
        for n in range(1, args.max_order + 1)
    ]
    graphs += [
        ("fortress-1-1", build_fortress_graph((1, 1))),
        ("fortress-1-1-1", build_fortress_graph((1, 1, 1))),
    ]

    print(f"preferred kernel: {oracle_backend()}")
    print(f"{'graph':<16} {'verts':>5} {'edges':>5} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    for name, nv, ne, pure_t, fast_t in bench(graphs, args.repeat):
        if fast_t is None:
            print(f"{name:<16} {nv:>5} {ne:>5} {pure_t:>9.4f}s {'-':>10} {'-':>8}")
        else:
            print(
                f"{name:<16} {nv:>5} {ne:>5} {pure_t:>9.4f}s {fast_t:>9.4f}s "
                f"{pure_t / fast_t:>7.1f}x"
            )


if __name__ == "__main__":
    main()
