"""Turing kernel for H-subgraph isomorphism parameterised by maximum degree.

Every connected pattern on ``c`` vertices has a centre within distance
``c // 2`` of all its vertices, so it occurs in ``G`` iff it occurs in the ball
of that radius around some vertex.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable

from trikern.graph import Graph, ProvenanceMap, max_degree
from trikern.instance import Pattern
from trikern.solvers import solve_hsi


@dataclass(frozen=True, eq=False)
class BallSubinstance:
    center: int
    radius: int
    graph: Graph
    provenance: ProvenanceMap


def ball(g: Graph, v: int, r: int) -> BallSubinstance:
    """Subgraph induced by all vertices within distance ``r`` of ``v``."""
    if r < 0:
        raise ValueError("radius must be nonnegative")
    dist = {v: 0}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        if dist[u] == r:
            continue
        for w in g.neighbors(u).tolist():
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    sub, prov = g.induced_subgraph(sorted(dist))
    return BallSubinstance(v, r, sub, prov)


def stated_ball_bound(delta: int, c: int) -> int:
    """``max(2, 2*delta*(delta-1)**(c//2))``, the advertised subinstance order bound."""
    return max(2, 2 * delta * max(delta - 1, 0) ** (c // 2))


def moore_bound(delta: int, r: int) -> int:
    """Largest possible order of a radius-``r`` ball in a graph of maximum degree ``delta``."""
    total, layer = 1, delta
    for _ in range(r):
        total += layer
        layer *= max(delta - 1, 0)
    return total


@dataclass
class TuringTrace:
    calls: list[tuple[int, int]] = field(default_factory=list)  # (centre, ball order)
    delta: int = 0
    radius: int = 0

    @property
    def n_calls(self) -> int:
        return len(self.calls)

    @property
    def largest(self) -> int:
        return max((order for _, order in self.calls), default=0)


def turing_solve(g: Graph, h: Pattern, oracle: Callable[[Graph, Pattern], bool] | None = None,
                 early_exit: bool = False) -> tuple[bool, TuringTrace]:
    """Ask ``oracle`` about the ``c // 2``-ball of every vertex; yes iff any ball says yes.

    All ``n`` balls are queried unless ``early_exit`` is set.
    """
    oracle = oracle or solve_hsi
    r = h.c // 2
    delta = max_degree(g)
    limit = moore_bound(delta, r)
    trace = TuringTrace(delta=delta, radius=r)
    answer = False
    for v in range(g.n):
        sub = ball(g, v, r)
        assert sub.graph.n <= limit, f"ball of order {sub.graph.n} exceeds {limit}"
        trace.calls.append((v, sub.graph.n))
        if oracle(sub.graph, h):
            answer = True
            if early_exit:
                break
    return answer, trace
