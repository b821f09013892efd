import numpy as np
import pytest
from hypothesis import given

from trikern import oracles
from trikern.graph import (
    Graph,
    GraphError,
    ParamKind,
    ProvenanceMap,
    component_order,
    components,
    degeneracy,
    degeneracy_ordering,
    disjoint_union,
    max_degree,
    param_value,
)

from conftest import graphs, random_graph

K3 = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])


def test_canonical_edges():
    g = Graph.from_edges(4, [(3, 1), (0, 2), (1, 0)], weights=[7, 8, 9])
    assert g.edges.tolist() == [[0, 1], [0, 2], [1, 3]]
    assert g.weights.tolist() == [9, 8, 7]
    assert g.has_edge(3, 1) and g.weight(1, 3) == 7


@pytest.mark.parametrize("edges, msg", [
    ([(0, 0)], "self-loop"),
    ([(0, 1), (1, 0)], "parallel"),
    ([(0, 5)], "range"),
])
def test_rejects_malformed(edges, msg):
    with pytest.raises(GraphError, match=msg):
        Graph.from_edges(3, edges)


def test_rejects_non_surjective_colouring():
    with pytest.raises(GraphError, match="surjective"):
        Graph.from_edges(3, [], colors=[1, 3, 3])


def test_rejects_huge_weight():
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 1)], weights=[2**61])


def test_components_small_cases():
    assert components(Graph.from_edges(0)) == []
    two = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    parts = components(two)
    assert [p.tolist() for p in parts] == [[0, 1, 2], [3, 4, 5]]
    assert component_order(two) == 3


def test_components_match_union_find():
    rng = np.random.default_rng(40)
    for _ in range(20):
        g = random_graph(rng, 40, 0.05)
        ours = {frozenset(p.tolist()) for p in components(g)}
        assert ours == {frozenset(s) for s in oracles.components_unionfind(g)}


def test_max_degree():
    assert max_degree(Graph.from_edges(2, [(0, 1)])) == 1
    assert max_degree(Graph.from_edges(6, [(0, i) for i in range(1, 6)])) == 5
    assert max_degree(Graph.from_edges(4)) == 0
    rng = np.random.default_rng(3)
    g = random_graph(rng, 30, 0.2)
    naive = max(sum(1 for e in g.edges.tolist() if v in e) for v in range(g.n))
    assert max_degree(g) == naive


def test_degeneracy_small():
    assert degeneracy_ordering(K3).d == 2
    tree = Graph.from_edges(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)])
    assert degeneracy_ordering(tree).d == 1
    assert degeneracy_ordering(Graph.from_edges(0)).d == 0


def test_degeneracy_ties_smallest_id():
    # every vertex of a 4-cycle has degree 2: vertex 0 goes first
    c4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert degeneracy_ordering(c4).order.tolist()[0] == 0


def test_degeneracy_matches_peeling_oracle():
    rng = np.random.default_rng(25)
    for _ in range(25):
        g = random_graph(rng, 25, 0.3)
        assert degeneracy_ordering(g).d == oracles.degeneracy_peeling(g) == degeneracy(g)


@given(graphs())
def test_degeneracy_ordering_invariant(g):
    dego = degeneracy_ordering(g)
    assert sorted(dego.order.tolist()) == list(range(g.n))
    for v in range(g.n):
        later = sum(1 for w in g.neighbors(v).tolist() if dego.position[w] > dego.position[v])
        assert later <= dego.d


@given(graphs())
def test_parameter_chain(g):
    d, delta, ell = (param_value(g, p) for p in (ParamKind.DEGENERACY, ParamKind.MAXDEG, ParamKind.COMPONENT))
    assert d <= delta <= ell


def test_param_value_k3():
    assert param_value(K3, ParamKind.COMPONENT) == 3
    assert param_value(K3, ParamKind.DEGENERACY) == 2


def _identity_part(g):
    return g, ProvenanceMap.identity(g)


def test_disjoint_union_single_and_pair():
    g, prov = disjoint_union([_identity_part(K3)])
    assert g == K3 and prov.vertex_origin.tolist() == [0, 1, 2]
    g, prov = disjoint_union([_identity_part(K3), _identity_part(K3)])
    assert (g.n, g.m, len(components(g))) == (6, 6, 2)
    assert prov.vertex_origin.tolist() == [0, 1, 2, 0, 1, 2]


def test_disjoint_union_copies_weights():
    rng = np.random.default_rng(100)
    for _ in range(100):
        g = random_graph(rng, int(rng.integers(1, 15)), 0.4, weighted=True)
        a, pa = g.induced_subgraph(rng.permutation(g.n)[: max(1, g.n // 2)])
        b, pb = g.induced_subgraph(np.arange(g.n))
        u, prov = disjoint_union([(a, pa), (b, pb)])
        assert u.weights.tolist() == g.weights[prov.edge_origin].tolist()
        # endpoints map back to the original edge
        back = np.sort(prov.vertex_origin[u.edges], axis=1)
        assert np.array_equal(back, g.edges[prov.edge_origin].reshape(-1, 2))


def test_induced_subgraph_is_induced():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2)])
    sub, prov = g.induced_subgraph([0, 2, 4])
    assert prov.vertex_origin.tolist() == [0, 2, 4]
    assert sub.edges.tolist() == [[0, 1], [0, 2]]
