"""Seeded random instance generators.

All randomness flows from one ``numpy.random.Generator`` seeded by the
caller, so a model/seed/parameter triple always yields the same instance.
"""
from __future__ import annotations

import numpy as np

from trikern.graph import Graph, ParamKind
from trikern.instance import Instance, Pattern, ProblemKind
from trikern.solvers import solve_nwt

DENSE_LIMIT = 2000


def gnp_edges(n: int, p: float, rng: np.random.Generator) -> np.ndarray:
    """Edge array of an Erdos-Renyi graph.

    Above ``DENSE_LIMIT`` vertices a Binomial number of random pairs is drawn
    and duplicates dropped, which is close to G(n, p) for sparse ``p``.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    if n < 2 or p == 0.0:
        return np.zeros((0, 2), dtype=np.int64)
    if n <= DENSE_LIMIT:
        iu, ju = np.triu_indices(n, k=1)
        keep = rng.random(len(iu)) < p
        return np.stack([iu[keep], ju[keep]], axis=1).astype(np.int64)
    m = rng.binomial(n * (n - 1) // 2, p)
    pairs = rng.integers(0, n, size=(m, 2))
    pairs = pairs[pairs[:, 0] != pairs[:, 1]]
    pairs.sort(axis=1)
    return np.unique(pairs, axis=0).astype(np.int64)


def _weights(m: int, lo: int, hi: int, rng: np.random.Generator) -> np.ndarray:
    if lo > hi:
        raise ValueError("wmin must not exceed wmax")
    return rng.integers(lo, hi + 1, size=m, dtype=np.int64)


def random_coloring(n: int, f: int, rng: np.random.Generator) -> np.ndarray:
    """Uniform colouring onto ``1..f`` forced to use every colour."""
    if f > n:
        raise ValueError(f"cannot colour {n} vertices surjectively with {f} colours")
    if n == 0:
        return np.zeros(0, dtype=np.int64)
    colors = rng.integers(1, f + 1, size=n, dtype=np.int64)
    colors[rng.permutation(n)[:f]] = np.arange(1, f + 1)
    return colors


def gnp(n: int, p: float, seed: int, problem: str = "hsi", pattern: str = "k3", wmin: int = -10,
        wmax: int = 10, f: int = 3, param: str = "component") -> Instance:
    rng = np.random.default_rng(seed)
    e = gnp_edges(n, p, rng)
    kind = ProblemKind(problem)
    w = _weights(len(e), wmin, wmax, rng) if kind is ProblemKind.NWT else None
    c = random_coloring(n, f, rng) if kind is ProblemKind.TC else None
    h = Pattern.named(pattern) if kind is ProblemKind.HSI else None
    return Instance(Graph.from_edges(n, e, w, c), kind, ParamKind(param), h)


def planted_nwt(n: int, p: float, seed: int, plant: bool = True, wmin: int = 0, wmax: int = 10,
                param: str = "component") -> Instance:
    """Random weights in ``[wmin, wmax]``; with ``plant`` a triangle of weight -3 is added."""
    if plant and n < 3:
        raise ValueError("need at least 3 vertices to plant a triangle")
    rng = np.random.default_rng(seed)
    e = gnp_edges(n, p, rng)
    w = _weights(len(e), wmin, wmax, rng)
    if plant:
        a, b, c = sorted(rng.choice(n, size=3, replace=False).tolist())
        tri = {(a, b), (b, c), (a, c)}
        keep = [i for i, (u, v) in enumerate(e.tolist()) if (u, v) not in tri]
        e = np.concatenate([e[keep], np.array(sorted(tri), dtype=np.int64).reshape(3, 2)])
        w = np.concatenate([w[keep], np.full(3, -1, dtype=np.int64)])
    inst = Instance(Graph.from_edges(n, e, w), ProblemKind.NWT, ParamKind(param))
    if plant:
        assert solve_nwt(inst.graph)[0], "planted instance is not a yes-instance"
    return inst


def random_tc(n: int, p: float, f: int, seed: int, param: str = "component") -> Instance:
    rng = np.random.default_rng(seed)
    e = gnp_edges(n, p, rng)
    return Instance(Graph.from_edges(n, e, colors=random_coloring(n, f, rng)), ProblemKind.TC, ParamKind(param))


def hard_ball(hubs: int, degree: int, seed: int, pattern: str = "c4", p: float = 0.02) -> Instance:
    """Hubs of high degree whose leaves are sparsely cross-linked; stresses ball sizes.

    The hubs themselves are joined in a path so the graph is connected.
    """
    if hubs < 1 or degree < 1:
        raise ValueError("hubs and degree must be positive")
    rng = np.random.default_rng(seed)
    n = hubs * (degree + 1)
    edges = []
    for i in range(hubs):
        hub = i * (degree + 1)
        edges += [(hub, hub + j) for j in range(1, degree + 1)]
        if i:
            edges.append((hub - degree - 1, hub))
    leaves = np.array([v for v in range(n) if v % (degree + 1)], dtype=np.int64)
    extra = gnp_edges(len(leaves), p, rng)
    edges += [tuple(x) for x in leaves[extra].tolist()]
    g = Graph.from_edges(n, edges)
    return Instance(g, ProblemKind.HSI, ParamKind.MAXDEG, Pattern.named(pattern))


MODELS = {
    "gnp": gnp,
    "planted-nwt": planted_nwt,
    "random-tc": random_tc,
    "hard-ball": hard_ball,
}


def generate(model: str, seed: int, **params) -> Instance:
    """Dispatch to a model by name; ``params`` are its keyword arguments."""
    try:
        fn = MODELS[model]
    except KeyError:
        raise ValueError(f"unknown model {model!r}; choose from {sorted(MODELS)}") from None
    return fn(seed=seed, **params)
