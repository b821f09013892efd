"""Compiled and pure-Python kernels must agree exactly."""
import numpy as np
import pytest

from trikern import _pykernels
from trikern.solvers import oriented

from conftest import random_graph

ckernels = pytest.importorskip("trikern._ckernels")


@pytest.mark.parametrize("seed", range(15))
def test_backends_agree(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, 60))
    g = random_graph(rng, n, float(rng.uniform(0.05, 0.6)), weighted=True, f=min(n, 5))
    eu, ev = np.ascontiguousarray(g.edges[:, 0]), np.ascontiguousarray(g.edges[:, 1])
    for a, b in zip(_pykernels.build_csr(g.n, eu, ev), ckernels.build_csr(g.n, eu, ev)):
        assert a.tolist() == b.tolist()
    for mod in (_pykernels, ckernels):
        assert mod.degeneracy_order(g.n, g.indptr, g.indices)[1] >= 0
    po, pd = _pykernels.degeneracy_order(g.n, g.indptr, g.indices)
    co, cd = ckernels.degeneracy_order(g.n, g.indptr, g.indices)
    assert pd == cd and po.tolist() == co.tolist()
    assert _pykernels.degeneracy_value(g.n, g.indptr, g.indices) == pd
    assert ckernels.degeneracy_value(g.n, g.indptr, g.indices) == pd

    ptr, dst, eids = oriented(g)
    w = np.ascontiguousarray(g.weights[eids])
    assert _pykernels.nwt_scan(g.n, ptr, dst, w) == ckernels.nwt_scan(g.n, ptr, dst, w)
    assert (_pykernels.tc_scan(g.n, ptr, dst, g.colors, g.f).tolist()
            == ckernels.tc_scan(g.n, ptr, dst, g.colors, g.f).tolist())

    for b in (1, 2, 5):
        cap = max(1, -(-int(g.degrees.max()) // b))
        assert (_pykernels.greedy_color(g.n, eu, ev, b, cap).tolist()
                == ckernels.greedy_color(g.n, eu, ev, b, cap).tolist())


def test_select_switches_solvers():
    from trikern import _kernels
    from trikern.graph import Graph
    from trikern.solvers import solve_nwt

    start = _kernels.BACKEND
    try:
        answers = []
        for name in ("python", "cython"):
            _kernels.select(name)
            assert _kernels.nwt_scan is getattr(_pykernels if name == "python" else ckernels, "nwt_scan")
            g = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)], weights=[1, -3, 1, 5])
            answers.append(solve_nwt(g)[0])
        assert answers == [True, True]
        with pytest.raises(ValueError):
            _kernels.select("fortran")
    finally:
        _kernels.select(start)
