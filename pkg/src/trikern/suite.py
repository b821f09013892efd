"""Seeded property suite behind ``trikern verify``.

Every check draws its instances from ``numpy.random.default_rng((seed, tag, trial))``
so results do not depend on which other checks ran, and reports how many
trials it ran and every violation it found.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from math import comb

import numpy as np

from trikern import oracles
from trikern.diminishers import Decided, DiminisherConfig, EdgeBudget, diminish, verify_diminisher
from trikern.edge_coloring import greedy_edge_color
from trikern.generators import gnp_edges, random_coloring
from trikern.graph import Graph, ParamKind, max_degree
from trikern.instance import Instance, Pattern, ProblemKind
from trikern.kernelize import Branch, interleave_solve, k_never_increases, strict_kernel
from trikern.solvers import solve, solve_hsi
from trikern.turing import moore_bound, stated_ball_bound, turing_solve

PARAM_TAGS = {ParamKind.COMPONENT: 1, ParamKind.MAXDEG: 2, ParamKind.DEGENERACY: 3}
PROBLEM_TAGS = {ProblemKind.NWT: 10, ProblemKind.TC: 20, ProblemKind.HSI: 30}


@dataclass
class CheckResult:
    name: str
    trials: int = 0
    violations: list[str] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = "".join(f" {k}={v}" for k, v in sorted(self.info.items()))
        return f"{status} {self.name}: {self.trials} trials, {len(self.violations)} violations{extra}"


def rng_for(seed: int, *tags: int) -> np.random.Generator:
    return np.random.default_rng([seed, *tags])


def random_instance(rng: np.random.Generator, problem: ProblemKind, param: ParamKind,
                    n_max: int = 60) -> Instance:
    """A random NWT or TC instance sized so that each diminisher regularly has work to do."""
    n = int(rng.integers(3, n_max + 1))
    if param is ParamKind.COMPONENT:
        p = float(rng.uniform(0.02, 0.35))
    else:
        p = float(rng.uniform(0.05, 0.7))
    e = gnp_edges(n, p, rng)
    if problem is ProblemKind.NWT:
        lo = int(rng.choice([-10, -3, -1, 0]))
        w = rng.integers(lo, 11, size=len(e))
        g = Graph.from_edges(n, e, weights=w)
    else:
        f = int(rng.integers(1, min(n, 8) + 1))
        g = Graph.from_edges(n, e, colors=random_coloring(n, f, rng))
    return Instance(g, problem, param)


def check_diminisher(seed: int, trials: int, problem: ProblemKind, param: ParamKind,
                     mode: EdgeBudget = EdgeBudget.EXACT, n_max: int = 60) -> CheckResult:
    """Answer preservation against the brute-force oracle, halving, strictness,
    blow-up and copy fidelity for one diminisher on one problem."""
    res = CheckResult(f"diminish/{param.value}/{problem.value}")
    reduced = 0
    max_parts = 0
    max_f = 0
    for t in range(trials):
        inst = random_instance(rng_for(seed, PARAM_TAGS[param], PROBLEM_TAGS[problem], t), problem, param, n_max)
        cfg = DiminisherConfig.for_instance(inst, mode)
        out = diminish(inst, cfg)
        rep = verify_diminisher(inst, out, cfg, oracle=oracles.decide)
        res.trials += 1
        res.violations += [f"trial {t}: {v}" for v in rep.violations]
        if isinstance(out, Decided):
            continue
        reduced += 1
        st = out.stats
        max_parts = max(max_parts, st.parts)
        max_f = max(max_f, st.classes)
        if param is ParamKind.COMPONENT:
            limit = comb(4 * cfg.c, cfg.c)
        elif param is ParamKind.MAXDEG:
            limit = comb(2 * cfg.edge_threshold - 1, cfg.budget)
            if st.classes > 2 * cfg.edge_threshold - 1:
                res.violations.append(f"trial {t}: {st.classes} colour classes")
        else:
            limit = comb(cfg.edge_threshold, cfg.budget)
            if st.parts != limit:
                res.violations.append(f"trial {t}: {st.parts} copies, expected exactly {limit}")
        if st.parts > limit:
            res.violations.append(f"trial {t}: {st.parts} copies exceed {limit}")
    res.info.update(reduced=reduced, max_parts=max_parts, max_classes=max_f)
    return res


def check_coloring(seed: int, trials: int, bs=(2, 12, 36)) -> CheckResult:
    res = CheckResult("edge-coloring")
    for t in range(trials):
        rng = rng_for(seed, 4, t)
        n = int(rng.integers(2, 80))
        g = Graph.from_edges(n, gnp_edges(n, float(rng.uniform(0.02, 0.9)), rng))
        delta = max_degree(g)
        for b in bs:
            col = greedy_edge_color(g, b)
            res.trials += 1
            cap = max(1, math.ceil(delta / b))
            if col.f > 2 * b - 1:
                res.violations.append(f"trial {t} b={b}: {col.f} colours")
            if col.max_load(g) > cap:
                res.violations.append(f"trial {t} b={b}: load {col.max_load(g)} > {cap}")
            if g.m and sorted(np.concatenate(col.classes()).tolist()) != list(range(g.m)):
                res.violations.append(f"trial {t} b={b}: colour classes do not partition E")
            if g.m and (col.colors.min() < 1 or set(col.colors.tolist()) != set(range(1, col.f + 1))):
                res.violations.append(f"trial {t} b={b}: colour ids not 1..f")
    return res


TURING_PATTERNS = ("k3", "p4", "c4")


def turing_graph(seed: int, t: int, n_max: int = 30) -> Graph:
    rng = rng_for(seed, 5, t)
    n = int(rng.integers(2, n_max + 1))
    return Graph.from_edges(n, gnp_edges(n, float(rng.uniform(0.05, 0.5)), rng))


def check_turing(seed: int, trials: int, stated_bound: bool = False) -> CheckResult:
    """Turing-kernel agreement with the whole-graph solver and per-call sizes.

    With ``stated_bound`` the ball orders are held to ``max(2, 2D(D-1)^(c//2))``
    instead of the exact Moore bound.
    """
    res = CheckResult("turing/stated-bound" if stated_bound else "turing")
    for t in range(trials):
        g = turing_graph(seed, t)
        for name in TURING_PATTERNS:
            h = Pattern.named(name)
            ans, trace = turing_solve(g, h)
            res.trials += 1
            if ans != solve_hsi(g, h):
                res.violations.append(f"trial {t} {name}: turing {ans} vs whole graph")
            if trace.n_calls != g.n:
                res.violations.append(f"trial {t} {name}: {trace.n_calls} oracle calls for n={g.n}")
            limit = (stated_ball_bound(trace.delta, h.c) if stated_bound
                     else moore_bound(trace.delta, h.c // 2))
            if trace.largest > limit:
                res.violations.append(f"trial {t} {name}: ball order {trace.largest} > {limit} "
                                      f"(max degree {trace.delta})")
    return res


def check_kernel(seed: int, trials: int, eps=2) -> CheckResult:
    res = CheckResult("strict-kernel")
    branches = {b: 0 for b in Branch}
    for t in range(trials):
        rng = rng_for(seed, 6, t)
        problem = ProblemKind.NWT if t % 2 == 0 else ProblemKind.TC
        param = list(ParamKind)[t % 3]
        inst = random_instance(rng, problem, param)
        out = strict_kernel(inst, eps)
        branches[out.branch] += 1
        res.trials += 1
        if out.new_k > out.old_k or out.instance.k != out.new_k:
            res.violations.append(f"trial {t}: k {out.old_k} -> {out.new_k}")
        if out.branch is Branch.UNCHANGED:
            if inst.graph.size > inst.k ** 3:
                res.violations.append(f"trial {t}: kept instance of size {inst.graph.size} > k^3")
        else:
            if out.instance.graph.size > 6:
                res.violations.append(f"trial {t}: trivial instance of size {out.instance.graph.size}")
            if oracles.decide(out.instance) != oracles.decide(inst):
                res.violations.append(f"trial {t}: trivial instance answer differs")
    res.info.update({b.value: c for b, c in branches.items()})
    return res


def _annotate(n: int, edges: dict, problem: ProblemKind, param: ParamKind,
              rng: np.random.Generator) -> Instance:
    pairs = sorted(edges)
    if problem is ProblemKind.NWT:
        g = Graph.from_edges(n, pairs, weights=[edges[e] for e in pairs])
    else:
        g = Graph.from_edges(n, pairs, colors=random_coloring(n, int(rng.integers(3, 6)), rng))
    return Instance(g, problem, param)


def _plant(edges: dict, u: int, v: int, x: int) -> None:
    for e in ((u, v), (v, x), (u, x)):
        edges[tuple(sorted(e))] = -5


def planted_instance(k0: int, seed: int, param: ParamKind, problem: ProblemKind = ProblemKind.NWT) -> Instance:
    """Instance whose parameter is exactly ``k0``; NWT ones carry a planted
    negative triangle half of the time.

    component order: random tree on ``k0`` vertices plus sparse chords;
    maximum degree: a hub with ``k0`` leaves plus sparse leaf-leaf edges;
    degeneracy: a clique on ``k0 + 1`` vertices plus a random tree tail.
    """
    rng = rng_for(seed, 7, k0, PARAM_TAGS[param])
    edges: dict[tuple[int, int], int] = {}
    if param is ParamKind.COMPONENT:
        n = k0
        for v in range(1, n):
            edges[tuple(sorted((v, int(rng.integers(0, v)))))] = 0
        for e in gnp_edges(n, min(1.0, 2.0 / n), rng).tolist():
            edges[tuple(e)] = 0
        plant = (0, 1, 2)
    elif param is ParamKind.MAXDEG:
        n = k0 + 1 + int(rng.integers(0, 10))
        for j in range(1, k0 + 1):
            edges[(0, j)] = 0
        for u, v in (gnp_edges(n - 1, 2.0 / n, rng) + 1).tolist():
            edges[(u, v)] = 0
        plant = (0, 1, 2)
    else:
        n = k0 + 1 + int(rng.integers(0, 20))
        for i in range(k0 + 1):
            for j in range(i + 1, k0 + 1):
                edges[(i, j)] = 0
        for v in range(k0 + 1, n):
            edges[(int(rng.integers(0, v)), v)] = 0
        plant = (0, 1, 2)
    for e in edges:
        edges[e] = int(rng.integers(0, 11))
    if problem is ProblemKind.NWT and rng.random() < 0.5:
        if param is ParamKind.COMPONENT:
            # two tree neighbours of one vertex plus the closing chord
            v = int(rng.integers(0, n))
            nbrs = sorted({a if b == v else b for a, b in edges if v in (a, b)})
            if len(nbrs) >= 2:
                plant = (nbrs[0], v, nbrs[1])
        _plant(edges, *plant)
    inst = _annotate(n, edges, problem, param, rng)
    if inst.k != k0:
        raise AssertionError(f"planted {param.value} instance has k={inst.k}, wanted {k0}")
    return inst


def check_interleave(seed: int, trials: int, k0s=(16, 32, 64, 128), eps=2) -> CheckResult:
    """Kernel/diminisher loop: oracle answer, monotone k and the round bound."""
    res = CheckResult("interleave")
    worst = 0
    for k0 in k0s:
        for t in range(trials):
            for problem in (ProblemKind.NWT, ProblemKind.TC):
                for param in ParamKind:
                    inst = planted_instance(k0, seed * 1000 + t, param, problem)
                    kk = inst.k
                    ans, trace = interleave_solve(inst, eps)
                    res.trials += 1
                    expected = oracles.decide(inst)
                    if ans != expected:
                        res.violations.append(f"k0={k0} trial {t} {inst.param.value}: answer {ans} vs {expected}")
                    bound = math.ceil(math.log2(max(kk, 1))) + 1
                    worst = max(worst, trace.diminish_rounds)
                    if trace.diminish_rounds > bound:
                        res.violations.append(f"k0={k0}: {trace.diminish_rounds} diminish rounds > {bound}")
                    if not k_never_increases(trace):
                        res.violations.append(f"k0={k0}: parameter increased along the trace")
                    if trace.rounds[-1].action != "decide":
                        res.violations.append(f"k0={k0}: trace does not end with decide")
    res.info["max_diminish_rounds"] = worst
    return res


def run_suite(seed: int = 1, trials: int = 300, progress=None) -> list[CheckResult]:
    results = []

    def add(r):
        results.append(r)
        if progress:
            progress(r)

    for param in ParamKind:
        for problem in (ProblemKind.NWT, ProblemKind.TC):
            add(check_diminisher(seed, trials, problem, param))
    add(check_coloring(seed, trials))
    add(check_turing(seed, max(1, trials * 2 // 3)))
    add(check_kernel(seed, trials))
    add(check_interleave(seed, max(1, trials // 100)))
    return results
