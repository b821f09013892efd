"""Reading and writing the line-based GKF instance format.

::

    # comment
    problem nwt|tc|hsi
    param component|maxdeg|degeneracy      (optional, default component)
    nodes <n>
    edge <u> <v> [w]                       (weight required iff nwt)
    color <v> <c>                          (one per vertex iff tc)
    pattern <c>                            (hsi only; later edges belong to H)
    edge <a> <b>

Blank lines and lines starting with ``#`` are ignored.
"""
from __future__ import annotations

from trikern.graph import Graph, GraphError, ParamKind, ProvenanceMap
from trikern.instance import Instance, Pattern, ProblemKind


class GkfError(ValueError):
    def __init__(self, lineno: int | None, msg: str):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {msg}" if lineno is not None else msg)


def _int(tok: str, lineno: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GkfError(lineno, f"bad {what} {tok!r}") from None


def parse_gkf(text: str) -> Instance:
    problem = None
    param = ParamKind.COMPONENT
    n = None
    edges, weights, seen = [], [], {}
    colors: dict[int, int] = {}
    pat_c = None
    pat_edges, pat_seen = [], {}

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tok = line.split()
        key, args = tok[0], tok[1:]
        if key == "problem":
            if len(args) != 1:
                raise GkfError(lineno, "expected 'problem nwt|tc|hsi'")
            try:
                problem = ProblemKind(args[0])
            except ValueError:
                raise GkfError(lineno, f"unknown problem {args[0]!r}") from None
        elif key == "param":
            if len(args) != 1:
                raise GkfError(lineno, "expected 'param component|maxdeg|degeneracy'")
            try:
                param = ParamKind(args[0])
            except ValueError:
                raise GkfError(lineno, f"unknown parameter {args[0]!r}") from None
        elif key == "nodes":
            if n is not None:
                raise GkfError(lineno, "repeated 'nodes'")
            if len(args) != 1:
                raise GkfError(lineno, "expected 'nodes <n>'")
            n = _int(args[0], lineno, "vertex count")
            if n < 0:
                raise GkfError(lineno, "negative vertex count")
        elif key == "pattern":
            if pat_c is not None:
                raise GkfError(lineno, "repeated 'pattern'")
            if len(args) != 1:
                raise GkfError(lineno, "expected 'pattern <c>'")
            pat_c = _int(args[0], lineno, "pattern order")
        elif key == "edge":
            if pat_c is not None:
                if len(args) != 2:
                    raise GkfError(lineno, "pattern edges take no weight")
                a, b = (_int(x, lineno, "vertex id") for x in args)
                if not (0 <= a < pat_c and 0 <= b < pat_c):
                    raise GkfError(lineno, f"pattern vertex out of range [0, {pat_c})")
                if a == b:
                    raise GkfError(lineno, "self-loop in pattern")
                pair = (min(a, b), max(a, b))
                if pair in pat_seen:
                    raise GkfError(lineno, f"duplicate pattern edge, first on line {pat_seen[pair]}")
                pat_seen[pair] = lineno
                pat_edges.append(pair)
                continue
            if n is None:
                raise GkfError(lineno, "'edge' before 'nodes'")
            if len(args) not in (2, 3):
                raise GkfError(lineno, "expected 'edge <u> <v> [w]'")
            u, v = _int(args[0], lineno, "vertex id"), _int(args[1], lineno, "vertex id")
            if not (0 <= u < n and 0 <= v < n):
                raise GkfError(lineno, f"vertex id out of range [0, {n})")
            if u == v:
                raise GkfError(lineno, "self-loop")
            pair = (min(u, v), max(u, v))
            if pair in seen:
                raise GkfError(lineno, f"duplicate edge {pair[0]} {pair[1]}, first on line {seen[pair]}")
            seen[pair] = lineno
            edges.append(pair)
            weights.append(_int(args[2], lineno, "weight") if len(args) == 3 else None)
        elif key == "color":
            if n is None:
                raise GkfError(lineno, "'color' before 'nodes'")
            if len(args) != 2:
                raise GkfError(lineno, "expected 'color <v> <c>'")
            v, c = _int(args[0], lineno, "vertex id"), _int(args[1], lineno, "colour")
            if not 0 <= v < n:
                raise GkfError(lineno, f"vertex id out of range [0, {n})")
            if c < 1:
                raise GkfError(lineno, "colours are positive integers")
            if v in colors:
                raise GkfError(lineno, f"vertex {v} coloured twice")
            colors[v] = c
        else:
            raise GkfError(lineno, f"unknown directive {key!r}")

    if problem is None:
        raise GkfError(None, "missing 'problem' line")
    if n is None:
        raise GkfError(None, "missing 'nodes' line")
    has_w = [w is not None for w in weights]
    if problem is ProblemKind.NWT:
        if not all(has_w):
            raise GkfError(seen[edges[has_w.index(False)]], "nwt edges need a weight")
    elif any(has_w):
        raise GkfError(seen[edges[has_w.index(True)]], f"weights only allowed for nwt, not {problem.value}")
    if problem is ProblemKind.TC:
        if len(colors) != n:
            missing = next(v for v in range(n) if v not in colors)
            raise GkfError(None, f"tc needs a colour for every vertex; vertex {missing} has none")
    elif colors:
        raise GkfError(None, f"colours only allowed for tc, not {problem.value}")
    if (pat_c is not None) != (problem is ProblemKind.HSI):
        raise GkfError(None, "a pattern section is required for hsi and only allowed there")

    try:
        g = Graph.from_edges(n, edges, weights if problem is ProblemKind.NWT else None,
                             [colors[v] for v in range(n)] if problem is ProblemKind.TC else None)
        pattern = Pattern.from_edges(pat_c, pat_edges) if pat_c is not None else None
    except GraphError as exc:
        raise GkfError(None, str(exc)) from None
    return Instance(g, problem, param, pattern)


def write_gkf(inst: Instance) -> str:
    g = inst.graph
    lines = [f"problem {inst.problem.value}", f"param {inst.param.value}", f"nodes {g.n}"]
    if inst.problem is ProblemKind.NWT and g.m:
        lines += [f"edge {u} {v} {w}" for (u, v), w in zip(g.edges.tolist(), g.weights.tolist())]
    else:
        lines += [f"edge {u} {v}" for u, v in g.edges.tolist()]
    if inst.problem is ProblemKind.TC:
        lines += [f"color {v} {c}" for v, c in enumerate(g.colors.tolist())]
    if inst.pattern is not None:
        h = inst.pattern.graph
        lines.append(f"pattern {h.n}")
        lines += [f"edge {a} {b}" for a, b in h.edges.tolist()]
    return "\n".join(lines) + "\n"


def write_provenance(g: Graph, prov: ProvenanceMap, source: Graph) -> str:
    """Sidecar lines ``v <new> <orig>`` and ``e <new-u> <new-v> <orig-u> <orig-v>``."""
    lines = [f"v {i} {o}" for i, o in enumerate(prov.vertex_origin.tolist())]
    orig = source.edges[prov.edge_origin].tolist() if g.m else []
    lines += [f"e {u} {v} {a} {b}" for (u, v), (a, b) in zip(g.edges.tolist(), orig)]
    return "\n".join(lines) + ("\n" if lines else "")
