"""Graph representation and the three structural parameters.

Graphs are immutable, simple and undirected with dense vertex ids ``0..n-1``.
Edges live in an ``(m, 2)`` int64 array with ``u < v`` per row, sorted
lexicographically, so every edge has a stable index that weights and
provenance maps refer to.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from trikern import _kernels

WEIGHT_LIMIT = 2**61


class GraphError(ValueError):
    """Raised for malformed graphs (self-loops, duplicates, bad ids...)."""


class ParamKind(enum.Enum):
    COMPONENT = "component"
    MAXDEG = "maxdeg"
    DEGENERACY = "degeneracy"


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


class Graph:
    """Undirected simple graph with optional integer edge weights and vertex colours.

    Use :meth:`from_edges` for untrusted input; the constructor assumes the
    arrays are already canonical.
    """

    def __init__(self, n: int, edges: np.ndarray, weights: np.ndarray | None = None,
                 colors: np.ndarray | None = None):
        self.n = int(n)
        self.edges = _frozen(np.asarray(edges, dtype=np.int64).reshape(-1, 2))
        self.weights = None if weights is None else _frozen(np.asarray(weights, dtype=np.int64))
        self.colors = None if colors is None else _frozen(np.asarray(colors, dtype=np.int64))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]] = (), weights: Sequence[int] | None = None,
                   colors: Sequence[int] | None = None) -> "Graph":
        """Validate and canonicalise. ``weights`` align with ``edges`` as given."""
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        e = np.asarray(list(edges), dtype=np.int64).reshape(-1, 2)
        if e.size and (e.min() < 0 or e.max() >= n):
            raise GraphError(f"edge endpoint out of range [0, {n})")
        if np.any(e[:, 0] == e[:, 1]):
            raise GraphError("self-loop")
        e = np.sort(e, axis=1)
        order = np.lexsort((e[:, 1], e[:, 0]))
        e = e[order]
        if len(e) > 1 and np.any(np.all(e[1:] == e[:-1], axis=1)):
            raise GraphError("parallel edge")
        w = None
        if weights is not None:
            w = np.asarray(list(weights), dtype=object)
            if len(w) != len(e):
                raise GraphError("weights do not match edges")
            if any(abs(int(x)) >= WEIGHT_LIMIT for x in w):
                raise GraphError("edge weight outside (-2^61, 2^61)")
            w = w.astype(np.int64)[order]
        c = None
        if colors is not None:
            c = np.asarray(list(colors), dtype=np.int64)
            if len(c) != n:
                raise GraphError("colour count does not match vertex count")
            check_surjective(c)
        return cls(n, e, w, c)

    # -- basic queries -------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def size(self) -> int:
        return self.n + self.m

    @property
    def f(self) -> int:
        """Number of colours (0 when uncoloured or empty)."""
        if self.colors is None or self.n == 0:
            return 0
        return int(self.colors.max())

    @cached_property
    def degrees(self) -> np.ndarray:
        return _frozen(np.bincount(self.edges.ravel(), minlength=self.n).astype(np.int64))

    @cached_property
    def _csr(self):
        eu = np.ascontiguousarray(self.edges[:, 0])
        ev = np.ascontiguousarray(self.edges[:, 1])
        return tuple(_frozen(a) for a in _kernels.build_csr(self.n, eu, ev))

    @property
    def indptr(self) -> np.ndarray:
        return self._csr[0]

    @property
    def indices(self) -> np.ndarray:
        return self._csr[1]

    @property
    def adj_edge(self) -> np.ndarray:
        """Edge index for each entry of :attr:`indices`."""
        return self._csr[2]

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {(int(u), int(v)): i for i, (u, v) in enumerate(self.edges)}

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edge_index

    def weight(self, u: int, v: int) -> int:
        if self.weights is None:
            raise GraphError("graph has no weights")
        if u > v:
            u, v = v, u
        return int(self.weights[self.edge_index[(u, v)]])

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n == other.n and np.array_equal(self.edges, other.edges)
                and _opt_equal(self.weights, other.weights) and _opt_equal(self.colors, other.colors))

    __hash__ = None

    def __repr__(self):
        extra = ""
        if self.weights is not None:
            extra += ", weighted"
        if self.colors is not None:
            extra += f", f={self.f}"
        return f"Graph(n={self.n}, m={self.m}{extra})"

    def induced_subgraph(self, vertices) -> tuple["Graph", "ProvenanceMap"]:
        verts = np.unique(np.asarray(vertices, dtype=np.int64))
        inside = np.zeros(self.n, dtype=bool)
        inside[verts] = True
        eids = np.flatnonzero(inside[self.edges[:, 0]] & inside[self.edges[:, 1]])
        return copy_parts(self, [(verts, eids)])


def _opt_equal(a, b) -> bool:
    if a is None or b is None:
        return a is None and b is None
    return np.array_equal(a, b)


def check_surjective(colors: np.ndarray) -> None:
    if len(colors) == 0:
        return
    if colors.min() < 1:
        raise GraphError("colours must be positive integers")
    used = np.unique(colors)
    if len(used) != colors.max():
        missing = sorted(set(range(1, int(colors.max()) + 1)) - set(used.tolist()))
        raise GraphError(f"colouring is not surjective; unused colours {missing[:5]}")


@dataclass(frozen=True, eq=False)
class ProvenanceMap:
    """Maps every vertex / edge index of a derived graph to one of the source graph."""

    vertex_origin: np.ndarray
    edge_origin: np.ndarray

    def compose(self, earlier: "ProvenanceMap") -> "ProvenanceMap":
        """Provenance relative to the source of ``earlier``."""
        return ProvenanceMap(earlier.vertex_origin[self.vertex_origin],
                             earlier.edge_origin[self.edge_origin])

    @classmethod
    def identity(cls, g: Graph) -> "ProvenanceMap":
        return cls(np.arange(g.n, dtype=np.int64), np.arange(g.m, dtype=np.int64))


@dataclass(frozen=True)
class DegeneracyOrdering:
    order: np.ndarray      # order[i] = vertex at position i
    position: np.ndarray   # inverse permutation
    d: int


def component_labels(g: Graph) -> tuple[int, np.ndarray]:
    """Component count and a label per vertex; labels follow the smallest member id."""
    if g.n == 0:
        return 0, np.zeros(0, dtype=np.int64)
    adj = coo_matrix((np.ones(g.m, dtype=np.int8), (g.edges[:, 0], g.edges[:, 1])), shape=(g.n, g.n))
    count, labels = connected_components(adj, directed=False)
    # relabel by first occurrence so the ordering does not depend on scipy internals
    _, first = np.unique(labels, return_index=True)
    rank = np.empty(count, dtype=np.int64)
    rank[np.argsort(first, kind="stable")] = np.arange(count)
    return int(count), rank[labels]


def components(g: Graph) -> list[np.ndarray]:
    """Vertex sets (sorted arrays) of the connected components, ordered by smallest member."""
    count, labels = component_labels(g)
    order = np.argsort(labels, kind="stable")
    bounds = np.cumsum(np.bincount(labels, minlength=count))[:-1]
    return np.split(order, bounds) if count else []


def component_order(g: Graph) -> int:
    if g.n == 0:
        return 0
    _, labels = component_labels(g)
    return int(np.bincount(labels).max())


def max_degree(g: Graph) -> int:
    return int(g.degrees.max()) if g.n else 0


def degeneracy_ordering(g: Graph) -> DegeneracyOrdering:
    order, d = _kernels.degeneracy_order(g.n, g.indptr, g.indices)
    position = np.empty(g.n, dtype=np.int64)
    position[order] = np.arange(g.n)
    return DegeneracyOrdering(_frozen(order), _frozen(position), int(d))


def degeneracy(g: Graph) -> int:
    # linear-time; the ordering itself needs the slower tie-broken peel
    return int(_kernels.degeneracy_value(g.n, g.indptr, g.indices))


def param_value(g: Graph, p: ParamKind) -> int:
    if p is ParamKind.COMPONENT:
        return component_order(g)
    if p is ParamKind.MAXDEG:
        return max_degree(g)
    if p is ParamKind.DEGENERACY:
        return degeneracy(g)
    raise ValueError(f"unknown parameter {p!r}")


def copy_parts(g: Graph, parts: Iterable[tuple[np.ndarray, np.ndarray]]) -> tuple[Graph, ProvenanceMap]:
    """Disjoint union of subgraphs of ``g``, each given as (sorted vertex ids, sorted edge ids).

    Every edge of a part must have both endpoints among the part's vertices.
    Vertices are renumbered consecutively part by part, keeping their relative
    order, so the output edge array is canonical without re-sorting.
    """
    local = np.full(g.n, -1, dtype=np.int64)
    vparts, eparts, vorig, eorig = [], [], [], []
    offset = 0
    for verts, eids in parts:
        verts = np.asarray(verts, dtype=np.int64)
        eids = np.asarray(eids, dtype=np.int64)
        local[verts] = np.arange(offset, offset + len(verts))
        ends = local[g.edges[eids]]
        if ends.size and ends.min() < offset:
            raise GraphError("part edge leaves its vertex set")
        eparts.append(ends)
        vorig.append(verts)
        eorig.append(eids)
        vparts.append(len(verts))
        local[verts] = -1
        offset += len(verts)
    if not vorig:
        empty = np.zeros(0, dtype=np.int64)
        return Graph(0, empty.reshape(0, 2), None if g.weights is None else empty,
                     None if g.colors is None else empty), ProvenanceMap(empty, empty)
    vo = np.concatenate(vorig)
    eo = np.concatenate(eorig)
    edges = np.concatenate(eparts).reshape(-1, 2)
    w = None if g.weights is None else g.weights[eo]
    c = None if g.colors is None else g.colors[vo]
    return Graph(offset, edges, w, c), ProvenanceMap(_frozen(vo), _frozen(eo))


def disjoint_union(parts: Sequence[tuple[Graph, ProvenanceMap]]) -> tuple[Graph, ProvenanceMap]:
    """Place the parts side by side; provenance is carried through unchanged."""
    n = 0
    edges, weights, colors, vo, eo = [], [], [], [], []
    for h, prov in parts:
        edges.append(h.edges + n)
        weights.append(h.weights)
        colors.append(h.colors)
        vo.append(prov.vertex_origin)
        eo.append(prov.edge_origin)
        n += h.n
    empty = np.zeros(0, dtype=np.int64)
    if not parts:
        return Graph(0, empty.reshape(0, 2)), ProvenanceMap(empty, empty)
    w = None if any(x is None for x in weights) else np.concatenate(weights)
    c = None if any(x is None for x in colors) else np.concatenate(colors)
    g = Graph(n, np.concatenate(edges).reshape(-1, 2), w, c)
    return g, ProvenanceMap(_frozen(np.concatenate(vo)), _frozen(np.concatenate(eo)))
