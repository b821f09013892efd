"""Pure-Python versions of the hot loops.

Every function here has a twin with the same signature in ``_ckernels.pyx``.
Inputs are numpy int64 arrays; outputs are plain Python values or int64 arrays.
"""
import heapq

import numpy as np


def build_csr(n, eu, ev):
    """Sorted adjacency lists of a canonical edge list (``eu < ev``, lex-sorted).

    Returns ``(indptr, indices, adj_edge)``; ``adj_edge`` gives the edge id of
    each adjacency entry.
    """
    m = len(eu)
    src = np.concatenate([eu, ev])
    dst = np.concatenate([ev, eu])
    eid = np.concatenate([np.arange(m), np.arange(m)]).astype(np.int64)
    order = np.lexsort((dst, src))
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
    return indptr, dst[order].astype(np.int64), eid[order]


def degeneracy_order(n, indptr, indices):
    """Peel minimum-degree vertices, smallest id first on ties.

    Returns ``(order, d)`` where ``order[i]`` is the i-th removed vertex and
    ``d`` the largest degree seen at removal time.
    """
    indptr = indptr.tolist()
    indices = indices.tolist()
    deg = [indptr[v + 1] - indptr[v] for v in range(n)]
    heap = [(deg[v], v) for v in range(n)]
    heapq.heapify(heap)
    removed = [False] * n
    order = []
    d = 0
    while heap:
        dv, v = heapq.heappop(heap)
        if removed[v] or dv != deg[v]:
            continue
        removed[v] = True
        order.append(v)
        if dv > d:
            d = dv
        for i in range(indptr[v], indptr[v + 1]):
            w = indices[i]
            if not removed[w]:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    return np.asarray(order, dtype=np.int64), d


def degeneracy_value(n, indptr, indices):
    """Degeneracy alone, by bucket-queue peeling in O(n + m)."""
    indptr = indptr.tolist()
    indices = indices.tolist()
    deg = [indptr[v + 1] - indptr[v] for v in range(n)]
    if not n:
        return 0
    md = max(deg)
    # vertices sorted by degree; pos/vert/start as in Batagelj-Zaversnik
    start = [0] * (md + 2)
    for x in deg:
        start[x + 1] += 1
    for i in range(md + 1):
        start[i + 1] += start[i]
    nxt = start[:]
    vert = [0] * n
    pos = [0] * n
    for v in range(n):
        pos[v] = nxt[deg[v]]
        vert[pos[v]] = v
        nxt[deg[v]] += 1
    d = 0
    for i in range(n):
        v = vert[i]
        dv = deg[v]
        if dv > d:
            d = dv
        for j in range(indptr[v], indptr[v + 1]):
            w = indices[j]
            dw = deg[w]
            if dw > dv:
                # swap w with the first vertex of its bucket, then shrink the bucket
                pw, ps = pos[w], start[dw]
                u = vert[ps]
                if u != w:
                    vert[pw], vert[ps] = u, w
                    pos[u], pos[w] = pw, ps
                start[dw] += 1
                deg[w] = dw - 1
    return d


def nwt_scan(n, optr, oidx, ow):
    """First negative triangle over an acyclic orientation, or None.

    ``optr``/``oidx`` hold each vertex's out-neighbours and ``ow`` the weight
    of the corresponding oriented edge.
    """
    optr = optr.tolist()
    oidx = oidx.tolist()
    ow = ow.tolist()
    mark = [None] * n
    for v in range(n):
        lo, hi = optr[v], optr[v + 1]
        if hi - lo < 2:
            continue
        for i in range(lo, hi):
            mark[oidx[i]] = ow[i]
        for i in range(lo, hi):
            u = oidx[i]
            wvu = ow[i]
            for j in range(optr[u], optr[u + 1]):
                x = oidx[j]
                wvx = mark[x]
                if wvx is not None:
                    s = wvu + ow[j] + wvx
                    if s < 0:
                        return v, u, x, s
        for i in range(lo, hi):
            mark[oidx[i]] = None
    return None


def tc_scan(n, optr, oidx, colors, f):
    """Sorted codes of colour triples realised by some triangle.

    A triple ``a < b < c`` (1-based colours) is encoded as
    ``((a-1)*f + b-1)*f + c-1``. Stops early once all triples are covered.
    """
    optr = optr.tolist()
    oidx = oidx.tolist()
    colors = colors.tolist()
    need = f * (f - 1) * (f - 2) // 6
    covered = set()
    if need == 0:
        return np.zeros(0, dtype=np.int64)
    mark = [False] * n
    for v in range(n):
        lo, hi = optr[v], optr[v + 1]
        if hi - lo < 2:
            continue
        for i in range(lo, hi):
            mark[oidx[i]] = True
        cv = colors[v]
        for i in range(lo, hi):
            u = oidx[i]
            cu = colors[u]
            if cu == cv:
                continue
            for j in range(optr[u], optr[u + 1]):
                x = oidx[j]
                if not mark[x]:
                    continue
                cx = colors[x]
                if cx == cv or cx == cu:
                    continue
                a, b, c = sorted((cv, cu, cx))
                covered.add(((a - 1) * f + b - 1) * f + c - 1)
        for i in range(lo, hi):
            mark[oidx[i]] = False
        if len(covered) == need:
            break
    return np.asarray(sorted(covered), dtype=np.int64)


def greedy_color(n, eu, ev, b, cap):
    """Give each edge the smallest colour both endpoints still have room for."""
    ncol = 2 * b
    load = [0] * (n * ncol)
    out = []
    for u, v in zip(eu.tolist(), ev.tolist()):
        bu, bv = u * ncol, v * ncol
        c = 0
        while load[bu + c] >= cap or load[bv + c] >= cap:
            c += 1
        load[bu + c] += 1
        load[bv + c] += 1
        out.append(c + 1)
    return np.asarray(out, dtype=np.int64)
