from itertools import combinations

import numpy as np
import pytest

from trikern import oracles
from trikern.diminishers import (
    Decided,
    DiminisherConfig,
    EdgeBudget,
    Reduced,
    WrongParameter,
    diminish,
    diminish_component_order,
    diminish_degeneracy,
    diminish_max_degree,
    forward_edge_classes,
    verify_diminisher,
)
from trikern.edge_coloring import greedy_edge_color
from trikern.graph import Graph, ParamKind, component_order, components, degeneracy_ordering, max_degree
from trikern.instance import Instance, Pattern, ProblemKind, TRIANGLE

from conftest import random_graph

EXACT = DiminisherConfig.for_pattern(TRIANGLE, EdgeBudget.EXACT)
PAPER = DiminisherConfig.for_pattern(TRIANGLE, EdgeBudget.PAPER)


def clique(n, weight=1):
    edges = list(combinations(range(n), 2))
    return Graph.from_edges(n, edges, weights=[weight] * len(edges))


def test_config_thresholds():
    assert (EXACT.budget, EXACT.edge_threshold, EXACT.component_threshold) == (3, 12, 12)
    assert (PAPER.budget, PAPER.edge_threshold) == (9, 36)


def test_component_order_20_clique():
    inst = Instance(clique(20), ProblemKind.NWT, ParamKind.COMPONENT)
    out = diminish_component_order(inst, EXACT)
    assert isinstance(out, Reduced)
    assert out.stats.parts == 220
    comps = components(out.instance.graph)
    assert len(comps) == 220
    # classes hold 2 or 1 vertices (20 = 8*2 + 4*1), so 3 classes give at most 6
    assert max(len(c) for c in comps) == 6 <= 10
    assert out.instance.k == 6
    rep = verify_diminisher(inst, out, EXACT)
    assert rep.ok, rep.violations
    assert out.stats.size_factor <= 220


def test_component_small_components_copied_verbatim():
    # order-20 clique plus a K3 (order 3 <= 10): the triangle is copied once
    g = clique(20)
    edges = g.edges.tolist() + [[20, 21], [21, 22], [20, 22]]
    g = Graph.from_edges(23, edges, weights=[1] * len(edges))
    out = diminish_component_order(Instance(g, ProblemKind.NWT), EXACT)
    origins = out.provenance.vertex_origin
    assert np.count_nonzero(origins == 21) == 1
    assert np.count_nonzero(origins == 0) == 55  # C(11, 2) subsets contain 0's class


def test_component_below_floor_decides():
    g = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)], weights=[-1, -1, -1])
    assert diminish_component_order(Instance(g, ProblemKind.NWT), EXACT) == Decided(True)


def test_wrong_parameter():
    inst = Instance(clique(4), ProblemKind.NWT, ParamKind.MAXDEG)
    with pytest.raises(WrongParameter):
        diminish_component_order(inst, EXACT)
    with pytest.raises(WrongParameter):
        diminish_degeneracy(inst, EXACT)


def test_max_degree_13():
    # hub 0 with 13 leaves plus a few leaf-leaf edges
    edges = [(0, i) for i in range(1, 14)] + [(1, 2), (3, 4), (2, 3)]
    g = Graph.from_edges(14, edges, weights=[1] * 13 + [-5, 2, 2])
    inst = Instance(g, ProblemKind.NWT, ParamKind.MAXDEG)
    assert inst.k == 13
    col = greedy_edge_color(g, 12)
    assert col.max_load(g) <= 2
    out = diminish_max_degree(inst, EXACT)
    assert isinstance(out, Reduced)
    assert out.instance.k <= 6 <= 13 // 2
    assert out.stats.parts == len(list(combinations(range(max(col.f, 12)), 3)))
    assert verify_diminisher(inst, out, EXACT, oracle=oracles.decide).ok


def test_max_degree_edgeless_decides_no():
    inst = Instance(Graph.from_edges(5, weights=[]), ProblemKind.NWT, ParamKind.MAXDEG)
    assert diminish_max_degree(inst, EXACT) == Decided(False)


def test_degeneracy_k30():
    inst = Instance(clique(30), ProblemKind.NWT, ParamKind.DEGENERACY)
    assert inst.k == 29
    out = diminish_degeneracy(inst, EXACT)
    assert isinstance(out, Reduced)
    assert out.stats.parts == 220
    assert out.instance.k <= 9 < 29 // 2
    assert verify_diminisher(inst, out, EXACT).ok


def test_degeneracy_below_floor_decides():
    g = random_graph(np.random.default_rng(5), 20, 0.3, weighted=True)
    inst = Instance(g, ProblemKind.NWT, ParamKind.DEGENERACY)
    assert inst.k <= 12
    assert diminish_degeneracy(inst, EXACT) == Decided(oracles.nwt_cubic(g))


def test_forward_edge_classes_naive():
    rng = np.random.default_rng(7)
    g = random_graph(rng, 30, 0.5)
    pos = degeneracy_ordering(g).position
    got = forward_edge_classes(g, 12)
    for v in range(g.n):
        fwd = sorted((int(pos[w]), w) for w in g.neighbors(v).tolist() if pos[w] > pos[v])
        for i, (_, w) in enumerate(fwd, 1):
            assert got[g.edge_index[(min(v, w), max(v, w))]] == i % 12 + 1


def test_decided_report_checks_answer_only():
    g = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)], weights=[-1, -1, -1])
    inst = Instance(g, ProblemKind.NWT)
    rep = verify_diminisher(inst, Decided(True))
    assert rep.ok and rep.checked == ["answer"]
    assert not verify_diminisher(inst, Decided(False)).ok


def test_verify_catches_tampering():
    inst = Instance(clique(20, weight=-1), ProblemKind.NWT)
    out = diminish(inst)
    g = out.instance.graph
    bad = Graph(g.n, g.edges, np.ones_like(g.weights), None)
    forged = Reduced(inst.with_graph(bad), out.provenance, out.stats)
    rep = verify_diminisher(inst, forged)
    assert any("weight" in v for v in rep.violations)
    assert any("answers" in v for v in rep.violations)


@pytest.mark.parametrize("param", list(ParamKind))
@pytest.mark.parametrize("problem", [ProblemKind.NWT, ProblemKind.TC])
def test_answer_preserved_random(param, problem):
    rng = np.random.default_rng([list(ParamKind).index(param), len(problem.value)])
    for _ in range(25):
        n = int(rng.integers(10, 45))
        if problem is ProblemKind.NWT:
            g = random_graph(rng, n, float(rng.uniform(0.1, 0.7)), weighted=True)
        else:
            g = random_graph(rng, n, float(rng.uniform(0.1, 0.7)), f=int(rng.integers(3, 6)))
        inst = Instance(g, problem, param)
        rep = verify_diminisher(inst, diminish(inst), oracle=oracles.decide)
        assert rep.ok, rep.violations


def test_copies_keep_colours():
    rng = np.random.default_rng(9)
    g = random_graph(rng, 40, 0.5, f=5)
    out = diminish(Instance(g, ProblemKind.TC, ParamKind.MAXDEG))
    assert out.instance.graph.colors.tolist() == g.colors[out.provenance.vertex_origin].tolist()
    assert out.instance.graph.f == g.f


def test_paper_budget_triangle_refuses_blowup():
    inst = Instance(clique(40), ProblemKind.NWT, ParamKind.MAXDEG)
    with pytest.raises(ValueError, match="exact"):
        diminish_max_degree(inst, PAPER)
    assert isinstance(diminish_max_degree(inst.with_graph(clique(12)), PAPER), Decided)


def test_paper_budget_fidelity_with_edge_pattern():
    # H = K2: budget c^2 = 4, threshold 16
    k2 = Pattern.named("p2")
    cfg = DiminisherConfig.for_pattern(k2, EdgeBudget.PAPER)
    assert (cfg.budget, cfg.edge_threshold) == (4, 16)
    star = Graph.from_edges(18, [(0, i) for i in range(1, 18)])
    for param in (ParamKind.MAXDEG, ParamKind.COMPONENT):
        inst = Instance(star, ProblemKind.HSI, param, k2)
        out = diminish(inst, cfg)
        assert isinstance(out, Reduced)
        assert verify_diminisher(inst, out, cfg, oracle=oracles.decide).ok


def test_hsi_diminisher_preserves_c4():
    rng = np.random.default_rng(11)
    c4 = Pattern.named("c4")
    for _ in range(10):
        g = random_graph(rng, 30, 0.12)
        for param in ParamKind:
            inst = Instance(g, ProblemKind.HSI, param, c4)
            assert verify_diminisher(inst, diminish(inst)).ok


def test_parameter_halves_per_application():
    rng = np.random.default_rng(13)
    for _ in range(20):
        g = random_graph(rng, 60, float(rng.uniform(0.3, 0.9)), weighted=True)
        for param, value in ((ParamKind.COMPONENT, component_order), (ParamKind.MAXDEG, max_degree)):
            inst = Instance(g, ProblemKind.NWT, param)
            out = diminish(inst)
            if isinstance(out, Reduced):
                assert 2 * value(out.instance.graph) <= max(value(g), 24)
