"""Exact deciders for NWT, TC and H-subgraph isomorphism.

Triangles are listed over the degeneracy orientation: each vertex only looks
at pairs of its later neighbours, so the total work is O(m * d).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from trikern import _kernels
from trikern.graph import Graph, GraphError, check_surjective, components, degeneracy_ordering
from trikern.instance import MAX_PATTERN_ORDER, Instance, Pattern, ProblemKind


@dataclass(frozen=True)
class TriangleWitness:
    vertices: tuple[int, int, int]
    weight: int | None = None
    colors: tuple[int, int, int] | None = None


def oriented(g: Graph) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """CSR of the orientation from earlier to later degeneracy position.

    Returns ``(ptr, targets, edge_ids)``.
    """
    pos = degeneracy_ordering(g).position
    e = g.edges
    flip = pos[e[:, 0]] > pos[e[:, 1]]
    src = np.where(flip, e[:, 1], e[:, 0])
    dst = np.where(flip, e[:, 0], e[:, 1])
    order = np.lexsort((dst, src))
    ptr = np.zeros(g.n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=g.n), out=ptr[1:])
    return ptr, dst[order].astype(np.int64), order.astype(np.int64)


def solve_nwt(g: Graph) -> tuple[bool, TriangleWitness | None]:
    if g.m and g.weights is None:
        raise GraphError("nwt needs edge weights on every edge")
    if g.m < 3:
        return False, None
    ptr, dst, eids = oriented(g)
    hit = _kernels.nwt_scan(g.n, ptr, dst, np.ascontiguousarray(g.weights[eids]))
    if hit is None:
        return False, None
    v, u, x, s = hit
    return True, TriangleWitness(tuple(sorted((v, u, x))), weight=s)


def covered_triples(g: Graph) -> set[tuple[int, int, int]]:
    """Colour triples realised by a triangle with three distinct colours."""
    f = g.f
    if f < 3 or g.m < 3:
        return set()
    ptr, dst, _ = oriented(g)
    codes = _kernels.tc_scan(g.n, ptr, dst, g.colors, f)
    a, rest = np.divmod(codes, f * f)
    b, c = np.divmod(rest, f)
    return {(int(x) + 1, int(y) + 1, int(z) + 1) for x, y, z in zip(a, b, c)}


def solve_tc(g: Graph) -> tuple[bool, tuple[int, int, int] | None]:
    """Yes iff every 3-set of colours appears on some triangle.

    On a no answer the lexicographically smallest uncovered triple is returned.
    """
    if g.n and g.colors is None:
        raise GraphError("tc needs a vertex colouring")
    if g.colors is not None:
        check_surjective(g.colors)
    f = g.f
    if f < 3:
        return True, None
    covered = covered_triples(g)
    if len(covered) == comb(f, 3):
        return True, None
    for t in combinations(range(1, f + 1), 3):
        if t not in covered:
            return False, t
    raise AssertionError("unreachable")


def _search_order(h: Graph) -> list[int]:
    # BFS order so every pattern vertex after the first has an earlier neighbour
    seen = [0]
    for v in seen:
        for w in h.neighbors(v).tolist():
            if w not in seen:
                seen.append(w)
    return seen


def _embeds(g: Graph, h: Graph, start_candidates) -> bool:
    order = _search_order(h)
    c = len(order)
    rank = {v: i for i, v in enumerate(order)}
    # for the i-th pattern vertex: positions of its earlier neighbours
    back = [sorted(rank[w] for w in h.neighbors(v).tolist() if rank[w] < i) for i, v in enumerate(order)]
    adj = [set(g.neighbors(v).tolist()) for v in range(g.n)]
    image = [0] * c
    used = set()

    def extend(i):
        if i == c:
            return True
        anchor = image[back[i][0]]
        for x in adj[anchor]:
            if x in used or any(image[j] not in adj[x] for j in back[i][1:]):
                continue
            image[i] = x
            used.add(x)
            if extend(i + 1):
                return True
            used.discard(x)
        return False

    for s in start_candidates:
        image[0] = s
        used.add(s)
        if extend(1):
            return True
        used.discard(s)
    return False


def solve_hsi(g: Graph, h: Pattern) -> bool:
    """Whether ``g`` contains ``h`` as a (not necessarily induced) subgraph."""
    if h.c > MAX_PATTERN_ORDER:
        raise GraphError(f"pattern order {h.c} exceeds {MAX_PATTERN_ORDER}")
    if g.n < h.c or g.m < h.m_h:
        return False
    hmax = int(h.graph.degrees.max())
    for comp in components(g):
        if len(comp) < h.c:
            continue
        sub, _ = g.induced_subgraph(comp)
        if sub.m < h.m_h or int(sub.degrees.max()) < hmax:
            continue
        h0deg = int(h.graph.degrees[0])
        starts = [v for v in range(sub.n) if sub.degrees[v] >= h0deg]
        if _embeds(sub, h.graph, starts):
            return True
    return False


def solve(inst: Instance) -> bool:
    """Decide an instance with the matching solver."""
    if inst.problem is ProblemKind.NWT:
        return solve_nwt(inst.graph)[0]
    if inst.problem is ProblemKind.TC:
        return solve_tc(inst.graph)[0]
    return solve_hsi(inst.graph, inst.pattern)


def solve_per_component(inst: Instance) -> bool:
    """Decide ``inst`` one connected component at a time.

    Triangles never cross components, so the degeneracy scan over the whole
    graph already visits each component separately; TC coverage is pooled
    across components. HSI searches each component on its own.
    """
    return solve(inst)
