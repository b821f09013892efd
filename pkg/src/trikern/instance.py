"""Problem instances: a graph, the question asked about it, and the parameter."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from trikern.graph import Graph, GraphError, ParamKind, component_order, param_value

MAX_PATTERN_ORDER = 8


class ProblemKind(enum.Enum):
    NWT = "nwt"
    TC = "tc"
    HSI = "hsi"


@dataclass(frozen=True, eq=False)
class Pattern:
    """Connected pattern graph H with ``c > 1`` vertices."""

    graph: Graph

    def __post_init__(self):
        g = self.graph
        if g.n < 2:
            raise GraphError("pattern needs at least two vertices")
        if g.n > MAX_PATTERN_ORDER:
            raise GraphError(f"pattern order {g.n} exceeds the supported maximum {MAX_PATTERN_ORDER}")
        if component_order(g) != g.n:
            raise GraphError("pattern must be connected")

    @property
    def c(self) -> int:
        return self.graph.n

    @property
    def m_h(self) -> int:
        return self.graph.m

    @classmethod
    def from_edges(cls, c: int, edges) -> "Pattern":
        return cls(Graph.from_edges(c, edges))

    @classmethod
    def named(cls, name: str) -> "Pattern":
        """``k3``, ``p<c>`` (path), ``c<c>`` (cycle), ``k<c>`` or ``s<c>`` (star)."""
        kind, size = name[0].lower(), int(name[1:])
        if kind == "p":
            edges = [(i, i + 1) for i in range(size - 1)]
        elif kind == "c":
            edges = [(i, (i + 1) % size) for i in range(size)]
        elif kind == "k":
            edges = [(i, j) for i in range(size) for j in range(i + 1, size)]
        elif kind == "s":
            edges = [(0, i) for i in range(1, size)]
        else:
            raise ValueError(f"unknown pattern name {name!r}")
        return cls.from_edges(size, edges)

    def __eq__(self, other):
        return isinstance(other, Pattern) and self.graph == other.graph

    __hash__ = None


TRIANGLE = Pattern.from_edges(3, [(0, 1), (1, 2), (0, 2)])


@dataclass(frozen=True, eq=False)
class Instance:
    """A graph with a problem and a parameter kind.

    ``k`` is always recomputed from the graph.
    """

    graph: Graph
    problem: ProblemKind
    param: ParamKind = ParamKind.COMPONENT
    pattern: Pattern | None = field(default=None)

    def __post_init__(self):
        g = self.graph
        if self.problem is ProblemKind.HSI:
            if self.pattern is None:
                raise GraphError("hsi instance needs a pattern")
        elif self.pattern is not None:
            raise GraphError(f"{self.problem.value} instances take no pattern")
        if self.problem is ProblemKind.NWT and g.weights is None:
            if g.m:
                raise GraphError("nwt instance needs edge weights")
            object.__setattr__(self, "graph", Graph(g.n, g.edges, np.zeros(0, dtype=np.int64), g.colors))
        if self.problem is ProblemKind.TC and g.colors is None:
            if g.n:
                raise GraphError("tc instance needs vertex colours")
            object.__setattr__(self, "graph", Graph(g.n, g.edges, g.weights, np.zeros(0, dtype=np.int64)))

    @cached_property
    def k(self) -> int:
        return param_value(self.graph, self.param)

    @property
    def h(self) -> Pattern:
        """The pattern searched for (a triangle for NWT and TC)."""
        return TRIANGLE if self.pattern is None else self.pattern

    def with_graph(self, g: Graph) -> "Instance":
        return Instance(g, self.problem, self.param, self.pattern)

    def with_param(self, p: ParamKind) -> "Instance":
        return Instance(self.graph, self.problem, p, self.pattern)

    def __eq__(self, other):
        if not isinstance(other, Instance):
            return NotImplemented
        return (self.graph == other.graph and self.problem is other.problem
                and self.param is other.param and self.pattern == other.pattern)

    __hash__ = None
