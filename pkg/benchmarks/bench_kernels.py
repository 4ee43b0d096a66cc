"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import timeit

from hexcover import _kernels_py
from hexcover.circulant import mobius_ladder
from hexcover.cubic_enum import enumerate_cubic
from hexcover.graph import cycle_edges, enumerate_cycles
from hexcover.named import heawood

try:
    from hexcover import _kernels as compiled
except ImportError:
    compiled = None


def cover_instance(g):
    index = {e: i for i, e in enumerate(g.edges())}
    return len(index), [tuple(index[e] for e in cycle_edges(h)) for h in enumerate_cycles(g, 6)]


def workloads():
    corpus = [[list(a) for a in g.adj] for g in enumerate_cubic(12).graphs]
    zero = [[0] * len(a) for a in corpus]
    m_hea, rows_hea = cover_instance(heawood())
    oracle = [cover_instance(g) for g in enumerate_cubic(14).graphs]
    ladder = [list(a) for a in mobius_ladder(20).adj]
    hea = [list(a) for a in heawood().adj]
    return [
        ("canon_label, 85 cubic graphs n=12", lambda k: [k.canon_label(a, z) for a, z in zip(corpus, zero)]),
        ("exact_cover2 all, Heawood hexagons", lambda k: k.exact_cover2(m_hea, rows_hea, True)),
        ("exact_cover2 first, 509 graphs n=14", lambda k: [k.exact_cover2(m, r, False) for m, r in oracle]),
        ("ham_cycles all, Heawood", lambda k: k.ham_cycles(hea, 0)),
        ("ham_cycles all, M_20", lambda k: k.ham_cycles(ladder, 0)),
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    impls = [("python", _kernels_py)] + ([("compiled", compiled)] if compiled else [])
    print(f"{'workload':<38}" + "".join(f"{name:>12}" for name, _ in impls) + ("     speedup" if compiled else ""))
    for label, fn in workloads():
        if compiled is not None:
            assert fn(compiled) == fn(_kernels_py), label
        best = [min(timeit.repeat(lambda: fn(k), number=1, repeat=args.repeat)) for _, k in impls]
        row = f"{label:<38}" + "".join(f"{t * 1000:>10.2f}ms" for t in best)
        if compiled is not None:
            row += f"{best[0] / best[1]:>11.1f}x"
        print(row)
    if compiled is None:
        print("compiled kernels not built; only the fallback was timed")


if __name__ == "__main__":
    main()
