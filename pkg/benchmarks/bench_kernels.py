"""Compiled vs pure-Python kernels, and diminisher scaling per backend.

    python benchmarks/bench_kernels.py [--sizes 1000 10000] [--repeat 3]

Each kernel runs on a fresh sparse random graph so no cached adjacency is
shared between backends. Times are best-of-``repeat`` wall clock.
"""
import argparse
import time

import numpy as np

from trikern import _kernels
from trikern.diminishers import diminish
from trikern.generators import gnp_edges, random_coloring
from trikern.graph import Graph, ParamKind
from trikern.instance import Instance, ProblemKind
from trikern.solvers import oriented


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best * 1000.0


def kernel_cases(n, rng):
    e = gnp_edges(n, 8.0 / n, rng)
    g = Graph.from_edges(n, e, weights=rng.integers(0, 10, size=len(e)), colors=random_coloring(n, 6, rng))
    eu, ev = np.ascontiguousarray(g.edges[:, 0]), np.ascontiguousarray(g.edges[:, 1])
    ptr, dst, eids = oriented(g)
    w = np.ascontiguousarray(g.weights[eids])
    cap = -(-int(g.degrees.max()) // 4)
    return g.m, {
        "build_csr": lambda k: k.build_csr(n, eu, ev),
        "degeneracy_order": lambda k: k.degeneracy_order(n, g.indptr, g.indices),
        "degeneracy_value": lambda k: k.degeneracy_value(n, g.indptr, g.indices),
        "nwt_scan": lambda k: k.nwt_scan(n, ptr, dst, w),
        "tc_scan": lambda k: k.tc_scan(n, ptr, dst, g.colors, 6),
        "greedy_color": lambda k: k.greedy_color(n, eu, ev, 4, cap),
    }


def diminisher_instance(n, param, seed):
    rng = np.random.default_rng(seed)
    e = gnp_edges(n, (1.5 if param is ParamKind.COMPONENT else 2.0) / n, rng)
    extra = {ParamKind.COMPONENT: [], ParamKind.MAXDEG: [(0, j) for j in range(1, 40)],
             ParamKind.DEGENERACY: [(i, j) for i in range(16) for j in range(i + 1, 16)]}[param]
    e = np.unique(np.sort(np.concatenate([e, np.array(extra, dtype=np.int64).reshape(-1, 2)]), axis=1), axis=0)
    return Instance(Graph.from_edges(n, e, weights=rng.integers(0, 10, size=len(e))), ProblemKind.NWT, param)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[1000, 10000, 100000])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    from trikern import _ckernels, _pykernels

    print(f"{'kernel':18s} {'n':>7s} {'m':>8s} {'python ms':>10s} {'cython ms':>10s} {'speedup':>8s}")
    for n in args.sizes:
        m, cases = kernel_cases(n, np.random.default_rng(n))
        for name, fn in cases.items():
            tp = best_of(lambda: fn(_pykernels), args.repeat)
            tc = best_of(lambda: fn(_ckernels), args.repeat)
            print(f"{name:18s} {n:7d} {m:8d} {tp:10.2f} {tc:10.2f} {tp / tc:7.1f}x")

    print()
    print(f"{'diminisher':12s} {'n':>7s} {'n+m':>8s} {'python ms':>10s} {'cython ms':>10s} {'speedup':>8s}")
    for param in ParamKind:
        for n in args.sizes:
            times = {}
            for backend in ("python", "cython"):
                _kernels.select(backend)
                # fresh instance each run: adjacency and parameters are cached on the graph
                insts = [diminisher_instance(n, param, n) for _ in range(args.repeat)]
                it = iter(insts)
                times[backend] = best_of(lambda: diminish(next(it)), args.repeat)
            size = insts[0].graph.size
            print(f"{param.value:12s} {n:7d} {size:8d} {times['python']:10.1f} {times['cython']:10.1f} "
                  f"{times['python'] / times['cython']:7.1f}x")
    _kernels.select("cython")


if __name__ == "__main__":
    main()
