import numpy as np
import pytest
from hypothesis import settings
from hypothesis import strategies as st

from trikern.graph import Graph

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def graphs(draw, max_n=12, weighted=False, colored=False, max_f=5):
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [e for e, keep in zip(pairs, mask) if keep]
    w = draw(st.lists(st.integers(-10, 10), min_size=len(edges), max_size=len(edges))) if weighted else None
    c = None
    if colored:
        f = draw(st.integers(min(n, 1), min(n, max_f)))
        rest = draw(st.lists(st.integers(1, max(f, 1)), min_size=n - f, max_size=n - f))
        c = draw(st.permutations(list(range(1, f + 1)) + rest))
    return Graph.from_edges(n, edges, w, c)


def random_graph(rng, n, p, weighted=False, f=None):
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(len(iu)) < p
    edges = np.stack([iu[keep], ju[keep]], axis=1)
    w = rng.integers(-10, 11, size=len(edges)) if weighted else None
    c = None
    if f is not None:
        c = rng.integers(1, f + 1, size=n)
        c[rng.permutation(n)[:f]] = np.arange(1, f + 1)
    return Graph.from_edges(n, edges, w, c)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
