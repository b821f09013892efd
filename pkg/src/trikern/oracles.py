"""Brute-force deciders used to cross-check the fast paths.

Deliberately naive: all vertex triples, all injective maps, full BFS. They
share nothing with the solvers beyond the :class:`Graph` container.
"""
from __future__ import annotations

from collections import deque
from itertools import combinations, permutations

from trikern.graph import Graph
from trikern.instance import Instance, Pattern, ProblemKind


def _adjacency(g: Graph) -> tuple[list[set[int]], dict[tuple[int, int], int]]:
    adj = [set() for _ in range(g.n)]
    w = {}
    weights = g.weights.tolist() if g.weights is not None and len(g.weights) else [None] * g.m
    for (u, v), x in zip(g.edges.tolist(), weights):
        adj[u].add(v)
        adj[v].add(u)
        w[(u, v)] = w[(v, u)] = x
    return adj, w


def all_triangles(g: Graph):
    adj, _ = _adjacency(g)
    for a, b, c in combinations(range(g.n), 3):
        if b in adj[a] and c in adj[a] and c in adj[b]:
            yield a, b, c


def nwt_cubic(g: Graph) -> bool:
    adj, w = _adjacency(g)
    for a, b, c in combinations(range(g.n), 3):
        if b in adj[a] and c in adj[a] and c in adj[b]:
            if w[(a, b)] + w[(b, c)] + w[(a, c)] < 0:
                return True
    return False


def tc_covered_cubic(g: Graph) -> set[tuple[int, int, int]]:
    col = g.colors.tolist() if g.colors is not None else []
    covered = set()
    for a, b, c in all_triangles(g):
        s = {col[a], col[b], col[c]}
        if len(s) == 3:
            covered.add(tuple(sorted(s)))
    return covered


def tc_cubic(g: Graph) -> bool:
    f = max(g.colors.tolist(), default=0) if g.colors is not None else 0
    covered = tc_covered_cubic(g)
    return all(t in covered for t in combinations(range(1, f + 1), 3))


def hsi_bruteforce(g: Graph, h: Pattern) -> bool:
    adj, _ = _adjacency(g)
    hedges = h.graph.edges.tolist()
    for image in permutations(range(g.n), h.c):
        if all(image[b] in adj[image[a]] for a, b in hedges):
            return True
    return False


def decide(inst: Instance) -> bool:
    if inst.problem is ProblemKind.NWT:
        return nwt_cubic(inst.graph)
    if inst.problem is ProblemKind.TC:
        return tc_cubic(inst.graph)
    return hsi_bruteforce(inst.graph, inst.pattern)


def distances(g: Graph, source: int) -> dict[int, int]:
    adj, _ = _adjacency(g)
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def components_unionfind(g: Graph) -> list[set[int]]:
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges.tolist():
        parent[find(u)] = find(v)
    groups: dict[int, set[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), set()).add(v)
    return list(groups.values())


def degeneracy_peeling(g: Graph) -> int:
    """Repeatedly delete some minimum-degree vertex; the answer is the largest degree deleted."""
    adj, _ = _adjacency(g)
    alive = set(range(g.n))
    best = 0
    while alive:
        v = min(alive, key=lambda x: len(adj[x] & alive))
        best = max(best, len(adj[v] & alive))
        alive.remove(v)
    return best
