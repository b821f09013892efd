"""Running-time derived strict kernel and the kernel/diminisher solving loop."""
from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from trikern.diminishers import Decided, DiminisherConfig, diminish
from trikern.graph import Graph, component_labels
from trikern.instance import Instance, ProblemKind
from trikern.solvers import solve

DEFAULT_EPS = Fraction(2)


class Branch(enum.Enum):
    UNCHANGED = "unchanged"
    TRIVIAL_YES = "trivial-yes"
    TRIVIAL_NO = "trivial-no"


@dataclass(frozen=True, eq=False)
class KernelOutcome:
    instance: Instance
    old_k: int
    new_k: int
    branch: Branch


def as_eps(eps) -> Fraction:
    """Parse ``eps`` (int, Fraction, float or a string like ``"3/2"``) as a positive rational."""
    value = Fraction(str(eps)) if isinstance(eps, (str, float)) else Fraction(eps)
    value = value.limit_denominator(1000)
    if value <= 0:
        raise ValueError(f"eps must be positive, got {eps}")
    return value


def within_kernel_size(k: int, size: int, eps: Fraction) -> bool:
    """Exact test of ``k ** (1 + eps) >= size`` for rational ``eps``."""
    p, q = eps.numerator, eps.denominator
    return k ** (q + p) >= size ** q


def trivial_instance(inst_or_problem, answer: bool, param=None, pattern=None) -> Instance:
    """Constant-size instance with the given answer.

    Accepts either a :class:`ProblemKind` or an instance whose problem,
    parameter and pattern are reused. Every parameter of the result is at most 3
    (for HSI, the pattern itself is the yes-instance).
    """
    if isinstance(inst_or_problem, Instance):
        problem, param, pattern = inst_or_problem.problem, inst_or_problem.param, inst_or_problem.pattern
    else:
        problem = inst_or_problem
    extra = {} if param is None else {"param": param}
    if problem is ProblemKind.NWT:
        if answer:
            g = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)], weights=[-1, -1, -1])
        else:
            g = Graph.from_edges(1, weights=[])
        return Instance(g, problem, **extra)
    if problem is ProblemKind.TC:
        if answer:
            g = Graph.from_edges(1, colors=[1])
        else:
            g = Graph.from_edges(3, colors=[1, 2, 3])
        return Instance(g, problem, **extra)
    g = pattern.graph if answer else Graph.from_edges(1)
    return Instance(g, problem, pattern=pattern, **extra)


def strict_kernel(inst: Instance, eps=DEFAULT_EPS) -> KernelOutcome:
    """Keep the instance if it is already small against ``k ** (1 + eps)``;
    otherwise solve it outright and emit a trivial instance with that answer."""
    eps = as_eps(eps)
    k = inst.k
    if within_kernel_size(k, inst.graph.size, eps):
        return KernelOutcome(inst, k, k, Branch.UNCHANGED)
    answer = solve(inst)
    out = trivial_instance(inst, answer)
    assert out.k <= k, "trivial instance would raise the parameter"
    return KernelOutcome(out, k, out.k, Branch.TRIVIAL_YES if answer else Branch.TRIVIAL_NO)


@dataclass(frozen=True)
class RoundRecord:
    action: str  # kernel | diminish | decide
    k_before: int
    k_after: int
    n: int
    m: int
    components: int
    ms: float


@dataclass
class InterleaveTrace:
    rounds: list[RoundRecord] = field(default_factory=list)
    answer: bool | None = None

    @property
    def diminish_rounds(self) -> int:
        return sum(r.action == "diminish" for r in self.rounds)

    def csv_rows(self, timing: bool = False) -> list[list[str]]:
        """Rows of ``round,action,k,n,m,components,ms``; ``ms`` is blank unless ``timing``."""
        return [[str(i), r.action, str(r.k_after), str(r.n), str(r.m), str(r.components),
                 f"{r.ms:.3f}" if timing else ""] for i, r in enumerate(self.rounds)]


def _record(trace: InterleaveTrace, action: str, before: int, inst: Instance, t0: float) -> None:
    g = inst.graph
    ncomp = component_labels(g)[0]
    trace.rounds.append(RoundRecord(action, before, inst.k, g.n, g.m, ncomp,
                                    (time.perf_counter() - t0) * 1000.0))


def interleave_solve(inst: Instance, eps=DEFAULT_EPS, cfg: DiminisherConfig | None = None,
                     max_rounds: int | None = None) -> tuple[bool, InterleaveTrace]:
    """Alternate the strict kernel with the matching diminisher until it decides."""
    cfg = cfg or DiminisherConfig.for_instance(inst)
    eps = as_eps(eps)
    trace = InterleaveTrace()
    t0 = time.perf_counter()
    kout = strict_kernel(inst, eps)
    cur = kout.instance
    _record(trace, "kernel", kout.old_k, cur, t0)
    while True:
        if max_rounds is not None and trace.diminish_rounds >= max_rounds:
            raise RuntimeError(f"no decision after {max_rounds} diminish rounds")
        t0 = time.perf_counter()
        before = cur.k
        out = diminish(cur, cfg)
        if isinstance(out, Decided):
            trace.rounds.append(RoundRecord("decide", before, before, cur.graph.n, cur.graph.m,
                                            component_labels(cur.graph)[0],
                                            (time.perf_counter() - t0) * 1000.0))
            trace.answer = out.answer
            return out.answer, trace
        cur = out.instance
        _record(trace, "diminish", before, cur, t0)
        t0 = time.perf_counter()
        kout = strict_kernel(cur, eps)
        cur = kout.instance
        _record(trace, "kernel", kout.old_k, cur, t0)


def k_never_increases(trace: InterleaveTrace) -> bool:
    ks = [trace.rounds[0].k_before] + [r.k_after for r in trace.rounds]
    return bool(np.all(np.diff(ks) <= 0))
