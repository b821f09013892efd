"""Strong linear-time parameter diminishers.

Each diminisher either decides the instance (when the parameter is already at
most its floor constant) or rebuilds it as a disjoint union of many small
copies of pieces of the input, so that every occurrence of the pattern survives
in some copy while the parameter at least halves.

* component order: round-robin split of every large component into ``4c``
  vertex classes, one induced copy per ``c``-subset of classes;
* maximum degree: greedy edge colouring with load cap, one copy per
  ``B``-subset of colour classes;
* degeneracy: round-robin split of each vertex's forward edges into ``4B``
  classes, one copy per ``B``-subset.

``B`` is the edge budget: ``c**2`` (``EdgeBudget.PAPER``) or the pattern's
edge count (``EdgeBudget.EXACT``).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

import numpy as np
from scipy.sparse import csr_matrix

from trikern.edge_coloring import greedy_edge_color
from trikern.graph import (
    Graph,
    ParamKind,
    ProvenanceMap,
    component_labels,
    components,
    copy_parts,
    degeneracy_ordering,
)
from trikern.instance import Instance, Pattern
from trikern.solvers import solve, solve_per_component


class EdgeBudget(enum.Enum):
    PAPER = "paper"
    EXACT = "exact"


MAX_COPIES = 100_000


class WrongParameter(ValueError):
    pass


@dataclass(frozen=True)
class DiminisherConfig:
    c: int
    m_h: int
    mode: EdgeBudget = EdgeBudget.EXACT

    def __post_init__(self):
        if self.budget < self.m_h:
            raise ValueError("edge budget must cover every pattern edge")

    @classmethod
    def for_pattern(cls, h: Pattern, mode: EdgeBudget = EdgeBudget.EXACT) -> "DiminisherConfig":
        return cls(h.c, h.m_h, mode)

    @classmethod
    def for_instance(cls, inst: Instance, mode: EdgeBudget = EdgeBudget.EXACT) -> "DiminisherConfig":
        return cls.for_pattern(inst.h, mode)

    @property
    def budget(self) -> int:
        return self.c * self.c if self.mode is EdgeBudget.PAPER else self.m_h

    @property
    def edge_threshold(self) -> int:
        return 4 * self.budget

    @property
    def component_threshold(self) -> int:
        return 4 * self.c

    def floor(self, param: ParamKind) -> int:
        return self.component_threshold if param is ParamKind.COMPONENT else self.edge_threshold


@dataclass(frozen=True)
class Decided:
    answer: bool


@dataclass(frozen=True)
class ReduceStats:
    old_k: int
    new_k: int
    size_factor: float
    parts: int          # copies emitted per split component / per graph
    classes: int        # classes subsets were drawn from (4c, f or 4B)
    subset_size: int


@dataclass(frozen=True, eq=False)
class Reduced:
    instance: Instance
    provenance: ProvenanceMap
    stats: ReduceStats = field(repr=False)


DiminishOutcome = Decided | Reduced


def _reduced(inst: Instance, g: Graph, prov: ProvenanceMap, **kw) -> Reduced:
    out = inst.with_graph(g)
    old = inst.graph
    stats = ReduceStats(old_k=inst.k, new_k=out.k, size_factor=g.size / max(1, old.size), **kw)
    return Reduced(out, prov, stats)


def _check_param(inst: Instance, param: ParamKind) -> None:
    if inst.param is not param:
        raise WrongParameter(f"expected parameter {param.value}, got {inst.param.value}")


def diminish_component_order(inst: Instance, cfg: DiminisherConfig) -> DiminishOutcome:
    _check_param(inst, ParamKind.COMPONENT)
    g, ell, c = inst.graph, inst.k, cfg.c
    classes = 4 * c
    if ell <= classes:
        return Decided(solve_per_component(inst))
    _, labels = component_labels(g)
    edge_label = labels[g.edges[:, 0]]
    edge_order = np.argsort(edge_label, kind="stable")
    edge_bounds = np.cumsum(np.bincount(edge_label, minlength=labels.max() + 1))[:-1]
    comp_edges = np.split(edge_order, edge_bounds)
    subsets = list(combinations(range(classes), c))
    parts = []
    for verts, eids in zip(components(g), comp_edges):
        if 2 * len(verts) <= ell:
            parts.append((verts, eids))
            continue
        # i-th vertex (1-based) goes to class i mod 4c
        cls = np.zeros(g.n, dtype=np.int64)
        cls[verts] = np.arange(1, len(verts) + 1) % classes
        vcls = cls[verts]
        ecls = cls[g.edges[eids]]
        for sub in subsets:
            chosen = np.zeros(classes, dtype=bool)
            chosen[list(sub)] = True
            parts.append((verts[chosen[vcls]], eids[chosen[ecls[:, 0]] & chosen[ecls[:, 1]]]))
    out, prov = copy_parts(g, parts)
    return _reduced(inst, out, prov, parts=len(subsets), classes=classes, subset_size=c)


def _edge_class_copies(inst: Instance, edge_class: np.ndarray, classes: int, budget: int):
    g = inst.graph
    if comb(classes, budget) > MAX_COPIES:
        raise ValueError(f"{comb(classes, budget)} copies (C({classes},{budget})) exceed {MAX_COPIES}; "
                         "use the exact edge budget")
    verts = np.arange(g.n, dtype=np.int64)
    subsets = list(combinations(range(1, classes + 1), budget))
    parts = []
    for sub in subsets:
        chosen = np.zeros(classes + 1, dtype=bool)
        chosen[list(sub)] = True
        parts.append((verts, np.flatnonzero(chosen[edge_class])))
    out, prov = copy_parts(g, parts)
    return _reduced(inst, out, prov, parts=len(subsets), classes=classes, subset_size=budget)


def diminish_max_degree(inst: Instance, cfg: DiminisherConfig) -> DiminishOutcome:
    _check_param(inst, ParamKind.MAXDEG)
    threshold = cfg.edge_threshold
    if inst.k <= threshold:
        return Decided(solve_per_component(inst))
    coloring = greedy_edge_color(inst.graph, threshold)
    # empty padding classes only duplicate copies
    f = max(coloring.f, threshold)
    return _edge_class_copies(inst, coloring.colors, f, cfg.budget)


def forward_edge_classes(g: Graph, classes: int) -> np.ndarray:
    """Class in ``1..classes`` for every edge, by round-robin over each vertex's
    forward edges in degeneracy order."""
    pos = degeneracy_ordering(g).position
    e = g.edges
    pu, pv = pos[e[:, 0]], pos[e[:, 1]]
    left = np.minimum(pu, pv)
    right = np.maximum(pu, pv)
    order = np.lexsort((right, left))
    sorted_left = left[order]
    starts = np.searchsorted(sorted_left, sorted_left, side="left")
    index = np.arange(g.m) - starts + 1  # 1-based rank among the left vertex's forward edges
    out = np.empty(g.m, dtype=np.int64)
    out[order] = index % classes + 1
    return out


def diminish_degeneracy(inst: Instance, cfg: DiminisherConfig) -> DiminishOutcome:
    _check_param(inst, ParamKind.DEGENERACY)
    threshold = cfg.edge_threshold
    if inst.k <= threshold:
        return Decided(solve_per_component(inst))
    return _edge_class_copies(inst, forward_edge_classes(inst.graph, threshold), threshold, cfg.budget)


DIMINISHERS = {
    ParamKind.COMPONENT: diminish_component_order,
    ParamKind.MAXDEG: diminish_max_degree,
    ParamKind.DEGENERACY: diminish_degeneracy,
}


def diminish(inst: Instance, cfg: DiminisherConfig | None = None) -> DiminishOutcome:
    """Apply the diminisher matching ``inst.param``."""
    cfg = cfg or DiminisherConfig.for_instance(inst)
    return DIMINISHERS[inst.param](inst, cfg)


def size_factor_bound(inst: Instance, cfg: DiminisherConfig, out: Reduced) -> int:
    if inst.param is ParamKind.COMPONENT:
        return comb(cfg.component_threshold, cfg.c)
    return comb(out.stats.classes, cfg.budget)


@dataclass
class VerifyReport:
    violations: list[str] = field(default_factory=list)
    checked: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def fail(self, msg: str) -> None:
        self.violations.append(msg)


def verify_diminisher(inst: Instance, out: DiminishOutcome, cfg: DiminisherConfig | None = None,
                      oracle=None, reduced_oracle=None) -> VerifyReport:
    """Check one diminisher application against the guarantees it must meet.

    ``oracle`` decides the input and ``reduced_oracle`` the output instance;
    both default to :func:`solve`. The output can be thousands of times larger
    than the input, so a brute-force oracle is only practical for the input.
    A :class:`Decided` outcome is checked only for its answer.
    """
    cfg = cfg or DiminisherConfig.for_instance(inst)
    oracle = oracle or solve
    reduced_oracle = reduced_oracle or solve
    rep = VerifyReport()
    expected = oracle(inst)
    rep.checked.append("answer")
    if isinstance(out, Decided):
        if out.answer != expected:
            rep.fail(f"decided {out.answer}, oracle says {expected}")
        return rep
    red = out.instance
    got = reduced_oracle(red)
    if got != expected:
        rep.fail(f"reduced instance answers {got}, oracle on input says {expected}")

    rep.checked.append("halving")
    old_k, new_k = inst.k, red.k
    floor = cfg.floor(inst.param)
    if 2 * new_k > max(old_k, 2 * floor):
        rep.fail(f"parameter {old_k} -> {new_k} exceeds max(k/2, {floor})")
    if new_k >= old_k:
        rep.fail(f"parameter did not shrink: {old_k} -> {new_k}")
    if out.stats.new_k != new_k or out.stats.old_k != old_k:
        rep.fail("stats disagree with recomputed parameters")

    rep.checked.append("size")
    bound = size_factor_bound(inst, cfg, out)
    if red.graph.size > bound * inst.graph.size:
        rep.fail(f"size factor {out.stats.size_factor:.2f} exceeds {bound}")

    rep.checked.append("copies")
    _check_copies(inst, out, rep)
    return rep


def _check_copies(inst: Instance, out: Reduced, rep: VerifyReport) -> None:
    g, h, prov = inst.graph, out.instance.graph, out.provenance
    vo, eo = prov.vertex_origin, prov.edge_origin
    if len(vo) != h.n or len(eo) != h.m:
        rep.fail("provenance length mismatch")
        return
    if h.m and not np.array_equal(np.sort(vo[h.edges], axis=1), g.edges[eo]):
        rep.fail("edge copies do not map onto their original endpoints")
    if g.weights is not None and not np.array_equal(h.weights, g.weights[eo]):
        rep.fail("edge weight differs from original")
    if g.colors is not None and not np.array_equal(h.colors, g.colors[vo]):
        rep.fail("vertex colour differs from original")
    if inst.param is ParamKind.COMPONENT and h.n:
        # every output component must be an induced copy of its origin set
        ncomp, labels = component_labels(h)
        member = csr_matrix((np.ones(h.n), (labels, vo)), shape=(ncomp, g.n))
        if member.max() > 1:
            rep.fail("component holds two copies of one vertex")
            return
        upper = csr_matrix((np.ones(g.m), (g.edges[:, 0], g.edges[:, 1])), shape=(g.n, g.n))
        want = np.asarray((member @ upper).multiply(member).sum(axis=1)).ravel()
        have = np.bincount(labels[h.edges[:, 0]], minlength=ncomp)
        if not np.array_equal(want.astype(np.int64), have):
            rep.fail("some component copy is not an induced subgraph of the input")


__all__ = [
    "Decided",
    "DiminishOutcome",
    "DiminisherConfig",
    "EdgeBudget",
    "ReduceStats",
    "Reduced",
    "VerifyReport",
    "WrongParameter",
    "diminish",
    "diminish_component_order",
    "diminish_degeneracy",
    "diminish_max_degree",
    "forward_edge_classes",
    "verify_diminisher",
]
