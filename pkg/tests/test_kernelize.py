from fractions import Fraction
from itertools import combinations, product

import numpy as np
import pytest

from trikern import oracles
from trikern.graph import Graph, ParamKind
from trikern.instance import Instance, ProblemKind
from trikern.kernelize import (
    Branch,
    as_eps,
    interleave_solve,
    k_never_increases,
    strict_kernel,
    trivial_instance,
    within_kernel_size,
)
from trikern.solvers import solve_nwt, solve_tc
from trikern.suite import planted_instance


def star_with_padding(leaves, total, weight=1):
    """Star K_{1,leaves} plus isolated vertices so that n + m == total."""
    n = total - leaves
    return Graph.from_edges(n, [(0, i) for i in range(1, leaves + 1)], weights=[weight] * leaves)


def test_unchanged_branch_threshold():
    inst = Instance(star_with_padding(11, 1000), ProblemKind.NWT, ParamKind.MAXDEG)
    assert inst.graph.size == 1000 and inst.k == 11
    out = strict_kernel(inst, 2)
    assert out.branch is Branch.UNCHANGED and out.instance is inst and out.new_k == 11


def test_solved_branch():
    inst = Instance(star_with_padding(5, 1000), ProblemKind.NWT, ParamKind.MAXDEG)
    out = strict_kernel(inst, 2)
    assert out.branch is Branch.TRIVIAL_NO
    assert solve_nwt(out.instance.graph)[0] is solve_nwt(inst.graph)[0] is False
    # a negative triangle among the leaves flips the answer
    g = inst.graph
    edges = g.edges.tolist() + [[1, 2]]
    g2 = Graph.from_edges(g.n, edges, weights=g.weights.tolist() + [-5])
    out = strict_kernel(Instance(g2, ProblemKind.NWT, ParamKind.MAXDEG), 2)
    assert out.branch is Branch.TRIVIAL_YES and out.new_k <= out.old_k


def test_exact_rational_threshold():
    eps = Fraction(1, 2)
    # 4^(3/2) = 8 exactly
    assert within_kernel_size(4, 8, eps)
    assert not within_kernel_size(4, 9, eps)
    assert as_eps("3/2") == Fraction(3, 2)
    assert as_eps(0.5) == Fraction(1, 2)
    with pytest.raises(ValueError):
        as_eps(0)


def test_trivial_instances():
    assert solve_nwt(trivial_instance(ProblemKind.NWT, True).graph)[0]
    assert not solve_nwt(trivial_instance(ProblemKind.NWT, False).graph)[0]
    assert solve_tc(trivial_instance(ProblemKind.TC, True).graph) == (True, None)
    assert solve_tc(trivial_instance(ProblemKind.TC, False).graph) == (False, (1, 2, 3))
    for problem, answer in product((ProblemKind.NWT, ProblemKind.TC), (True, False)):
        t = trivial_instance(problem, answer)
        assert t.graph.size <= 6
        for p in ParamKind:
            assert t.with_param(p).k <= 3


def _small_graphs(max_n=4):
    for n in range(0, max_n + 1):
        pairs = list(combinations(range(n), 2))
        for mask in product((0, 1), repeat=len(pairs)):
            yield n, [e for e, keep in zip(pairs, mask) if keep]


def test_trivial_never_raises_parameter_exhaustive():
    """A yes-answer is impossible whenever the yes-gadget has a larger parameter."""
    for n, edges in _small_graphs():
        for w in product((-1, 1), repeat=len(edges)):
            g = Graph.from_edges(n, edges, weights=list(w))
            for p in ParamKind:
                inst = Instance(g, ProblemKind.NWT, p)
                triv = trivial_instance(inst, oracles.nwt_cubic(g))
                assert triv.k <= inst.k or (inst.k == 0 and g.n == 0)
        for f in range(0, n + 1):
            for cols in product(range(1, f + 1), repeat=n):
                if len(set(cols)) != f:
                    continue
                g = Graph.from_edges(n, edges, colors=list(cols))
                for p in ParamKind:
                    inst = Instance(g, ProblemKind.TC, p)
                    triv = trivial_instance(inst, oracles.tc_cubic(g))
                    assert triv.k <= inst.k or g.n == 0


def test_kernel_strict_on_random():
    rng = np.random.default_rng(21)
    for t in range(60):
        n = int(rng.integers(1, 50))
        iu, ju = np.triu_indices(n, 1)
        keep = rng.random(len(iu)) < rng.uniform(0.05, 0.6)
        e = np.stack([iu[keep], ju[keep]], 1)
        g = Graph.from_edges(n, e, weights=rng.integers(-3, 10, len(e)))
        inst = Instance(g, ProblemKind.NWT, list(ParamKind)[t % 3])
        out = strict_kernel(inst)
        assert out.new_k <= out.old_k
        if out.branch is Branch.UNCHANGED:
            assert g.size <= inst.k ** 3
        else:
            assert oracles.nwt_cubic(out.instance.graph) == oracles.nwt_cubic(g)


def test_interleave_component_64():
    for seed in range(4):
        inst = planted_instance(64, seed, ParamKind.COMPONENT)
        # eps large enough that the kernel keeps everything: only diminishers act
        ans, trace = interleave_solve(inst, eps=100)
        assert ans == oracles.nwt_cubic(inst.graph)
        assert trace.diminish_rounds <= 3
        assert [r.action for r in trace.rounds][-1] == "decide"
        assert k_never_increases(trace)
        ks = [r.k_after for r in trace.rounds if r.action == "diminish"]
        assert all(b < a for a, b in zip([64] + ks, ks))


def test_interleave_below_floor():
    g = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)], weights=[-1, -1, -1])
    ans, trace = interleave_solve(Instance(g, ProblemKind.NWT))
    assert ans and trace.diminish_rounds == 0
    assert [r.action for r in trace.rounds] == ["kernel", "decide"]


def test_interleave_csv_rows_blank_ms_by_default():
    inst = planted_instance(32, 1, ParamKind.COMPONENT)
    _, trace = interleave_solve(inst)
    rows = trace.csv_rows()
    assert all(r[-1] == "" for r in rows)
    assert [r[0] for r in rows] == [str(i) for i in range(len(rows))]
    assert all(r[-1] != "" for r in trace.csv_rows(timing=True))
