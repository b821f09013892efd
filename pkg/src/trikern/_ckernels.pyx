# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot loops; see _pykernels for the contracts."""
import numpy as np
cimport numpy as cnp
from libcpp.vector cimport vector
from libcpp.pair cimport pair
from libcpp.queue cimport priority_queue
from libcpp.unordered_set cimport unordered_set

ctypedef long long i64

cnp.import_array()


def build_csr(i64 n, const i64[:] eu, const i64[:] ev):
    # lex order puts every (w, u) with w < u before the edges leaving u,
    # so appending in one pass keeps each list sorted
    cdef i64 m = eu.shape[0]
    cdef i64 e, u, v, p
    cdef cnp.ndarray[i64, ndim=1] indptr = np.zeros(n + 1, dtype=np.int64)
    cdef cnp.ndarray[i64, ndim=1] indices = np.empty(2 * m, dtype=np.int64)
    cdef cnp.ndarray[i64, ndim=1] adj_edge = np.empty(2 * m, dtype=np.int64)
    for e in range(m):
        indptr[eu[e] + 1] += 1
        indptr[ev[e] + 1] += 1
    for u in range(n):
        indptr[u + 1] += indptr[u]
    cdef vector[i64] fill = vector[i64](n)
    for u in range(n):
        fill[u] = indptr[u]
    for e in range(m):
        u = eu[e]
        v = ev[e]
        p = fill[v]
        indices[p] = u
        adj_edge[p] = e
        fill[v] = p + 1
        p = fill[u]
        indices[p] = v
        adj_edge[p] = e
        fill[u] = p + 1
    return indptr, indices, adj_edge


def degeneracy_order(i64 n, const i64[:] indptr, const i64[:] indices):
    cdef vector[i64] deg = vector[i64](n)
    cdef vector[char] removed = vector[char](n, 0)
    # max-heap on (-deg, -v) gives min degree, then min id
    cdef priority_queue[pair[i64, i64]] heap
    cdef i64 v, w, i, dv, d = 0, k = 0
    cdef cnp.ndarray[i64, ndim=1] order = np.empty(n, dtype=np.int64)
    for v in range(n):
        deg[v] = indptr[v + 1] - indptr[v]
        heap.push(pair[i64, i64](-deg[v], -v))
    while not heap.empty():
        dv = -heap.top().first
        v = -heap.top().second
        heap.pop()
        if removed[v] or dv != deg[v]:
            continue
        removed[v] = 1
        order[k] = v
        k += 1
        if dv > d:
            d = dv
        for i in range(indptr[v], indptr[v + 1]):
            w = indices[i]
            if not removed[w]:
                deg[w] -= 1
                heap.push(pair[i64, i64](-deg[w], -w))
    return order, d


def degeneracy_value(i64 n, const i64[:] indptr, const i64[:] indices):
    if n == 0:
        return 0
    cdef vector[i64] deg = vector[i64](n)
    cdef vector[i64] pos = vector[i64](n)
    cdef vector[i64] vert = vector[i64](n)
    cdef i64 v, w, u, i, j, dv, dw, pw, ps, d = 0, md = 0
    for v in range(n):
        deg[v] = indptr[v + 1] - indptr[v]
        if deg[v] > md:
            md = deg[v]
    cdef vector[i64] start = vector[i64](md + 2, 0)
    for v in range(n):
        start[deg[v] + 1] += 1
    for i in range(md + 1):
        start[i + 1] += start[i]
    cdef vector[i64] nxt = start
    for v in range(n):
        pos[v] = nxt[deg[v]]
        vert[pos[v]] = v
        nxt[deg[v]] += 1
    for i in range(n):
        v = vert[i]
        dv = deg[v]
        if dv > d:
            d = dv
        for j in range(indptr[v], indptr[v + 1]):
            w = indices[j]
            dw = deg[w]
            if dw > dv:
                pw = pos[w]
                ps = start[dw]
                u = vert[ps]
                if u != w:
                    vert[pw] = u
                    vert[ps] = w
                    pos[u] = pw
                    pos[w] = ps
                start[dw] += 1
                deg[w] = dw - 1
    return int(d)


def nwt_scan(i64 n, const i64[:] optr, const i64[:] oidx, const i64[:] ow):
    cdef vector[char] has = vector[char](n, 0)
    cdef vector[i64] mark = vector[i64](n, 0)
    cdef i64 v, u, x, i, j, lo, hi, wvu, s
    for v in range(n):
        lo = optr[v]
        hi = optr[v + 1]
        if hi - lo < 2:
            continue
        for i in range(lo, hi):
            has[oidx[i]] = 1
            mark[oidx[i]] = ow[i]
        for i in range(lo, hi):
            u = oidx[i]
            wvu = ow[i]
            for j in range(optr[u], optr[u + 1]):
                x = oidx[j]
                if has[x]:
                    s = wvu + ow[j] + mark[x]
                    if s < 0:
                        return int(v), int(u), int(x), int(s)
        for i in range(lo, hi):
            has[oidx[i]] = 0
    return None


def tc_scan(i64 n, const i64[:] optr, const i64[:] oidx, const i64[:] colors, i64 f):
    cdef i64 need = f * (f - 1) * (f - 2) // 6
    cdef unordered_set[i64] covered
    cdef vector[char] mark = vector[char](n, 0)
    cdef i64 v, u, x, i, j, lo, hi, cv, cu, cx, a, b, c, t
    if need == 0:
        return np.zeros(0, dtype=np.int64)
    for v in range(n):
        lo = optr[v]
        hi = optr[v + 1]
        if hi - lo < 2:
            continue
        for i in range(lo, hi):
            mark[oidx[i]] = 1
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
                a = cv
                b = cu
                c = cx
                if a > b:
                    t = a; a = b; b = t
                if b > c:
                    t = b; b = c; c = t
                if a > b:
                    t = a; a = b; b = t
                covered.insert(((a - 1) * f + b - 1) * f + c - 1)
        for i in range(lo, hi):
            mark[oidx[i]] = 0
        if <i64>covered.size() == need:
            break
    out = np.fromiter(covered, dtype=np.int64, count=covered.size())
    out.sort()
    return out


def greedy_color(i64 n, const i64[:] eu, const i64[:] ev, i64 b, i64 cap):
    cdef i64 ncol = 2 * b
    cdef i64 m = eu.shape[0]
    cdef vector[i64] load = vector[i64](n * ncol, 0)
    cdef cnp.ndarray[i64, ndim=1] out = np.empty(m, dtype=np.int64)
    cdef i64 e, bu, bv, c
    for e in range(m):
        bu = eu[e] * ncol
        bv = ev[e] * ncol
        c = 0
        while load[bu + c] >= cap or load[bv + c] >= cap:
            c += 1
            if c >= ncol:
                raise RuntimeError("greedy colouring exceeded 2b colours")
        load[bu + c] += 1
        load[bv + c] += 1
        out[e] = c + 1
    return out
