"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 parse error, 3 verification failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import sys
import time
from pathlib import Path

from trikern import BACKEND
from trikern.diminishers import Decided, DiminisherConfig, EdgeBudget, diminish
from trikern.generators import MODELS, generate
from trikern.gkf import GkfError, parse_gkf, write_gkf, write_provenance
from trikern.graph import GraphError, ParamKind, component_labels, component_order, degeneracy, max_degree
from trikern.instance import Instance, ProblemKind
from trikern.kernelize import as_eps, interleave_solve
from trikern.solvers import solve
from trikern.suite import run_suite
from trikern.turing import turing_solve

CSV_HEADER = ["round", "action", "k", "n", "m", "components", "ms"]

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _load(path: str, param: str | None) -> Instance:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    inst = parse_gkf(text)
    return inst.with_param(ParamKind(param)) if param else inst


def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _write_csv(rows, path: str) -> None:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    w.writerows(rows)
    _emit(buf.getvalue(), path)


def _cfg(inst: Instance, args) -> DiminisherConfig:
    return DiminisherConfig.for_instance(inst, EdgeBudget(args.edge_budget))


def cmd_solve(args) -> int:
    inst = _load(args.file, args.param)
    print("yes" if solve(inst) else "no")
    return EXIT_OK


def cmd_stats(args) -> int:
    g = _load(args.file, args.param).graph
    rows = [("n", g.n), ("m", g.m), ("components", component_labels(g)[0]),
            ("component_order", component_order(g)), ("max_degree", max_degree(g)),
            ("degeneracy", degeneracy(g))]
    for key, value in rows:
        print(f"{key} {value}")
    return EXIT_OK


def cmd_diminish(args) -> int:
    inst = _load(args.file, args.param)
    cfg = _cfg(inst, args)
    source = inst.graph
    prov = None
    rows = []
    cur = inst
    for r in range(args.rounds):
        t0 = time.perf_counter()
        out = diminish(cur, cfg)
        ms = (time.perf_counter() - t0) * 1000.0
        stamp = f"{ms:.3f}" if args.timing else ""
        if isinstance(out, Decided):
            g = cur.graph
            rows.append([r, "decide", cur.k, g.n, g.m, component_labels(g)[0], stamp])
            print(f"decided {'yes' if out.answer else 'no'}", file=sys.stderr)
            break
        prov = out.provenance if prov is None else out.provenance.compose(prov)
        cur = out.instance
        g = cur.graph
        rows.append([r, "diminish", cur.k, g.n, g.m, component_labels(g)[0], stamp])
        print(f"k {out.stats.old_k} -> {out.stats.new_k}, size x{out.stats.size_factor:.2f}",
              file=sys.stderr)
    _emit(write_gkf(cur), args.out)
    if args.provenance and prov is not None:
        _emit(write_provenance(cur.graph, prov, source), args.provenance)
    if args.csv:
        _write_csv(rows, args.csv)
    return EXIT_OK


def cmd_interleave(args) -> int:
    inst = _load(args.file, args.param)
    answer, trace = interleave_solve(inst, as_eps(args.eps), _cfg(inst, args), max_rounds=args.rounds)
    print("yes" if answer else "no")
    if args.csv:
        _write_csv(trace.csv_rows(timing=args.timing), args.csv)
    return EXIT_OK


def cmd_turing(args) -> int:
    inst = _load(args.file, None)
    if inst.problem is not ProblemKind.HSI:
        raise UsageError("turing needs an hsi instance")
    answer, trace = turing_solve(inst.graph, inst.pattern, early_exit=args.early_exit)
    print("yes" if answer else "no")
    print(f"oracle calls {trace.n_calls}, largest ball {trace.largest}, max degree {trace.delta}",
          file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    def progress(res):
        print(res.line(), flush=True)
        for v in res.violations[:args.show]:
            print(f"    {v}")

    print(f"backend {BACKEND}, seed {args.seed}, trials {args.trials}")
    results = run_suite(args.seed, args.trials, progress=progress)
    if args.csv:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["check", "trials", "violations"])
        w.writerows([r.name, r.trials, len(r.violations)] for r in results)
        _emit(buf.getvalue(), args.csv)
    return EXIT_OK if all(r.ok for r in results) else EXIT_VERIFY


def cmd_generate(args) -> int:
    params = {}
    for key in ("n", "p", "f", "plant", "wmin", "wmax", "problem", "pattern", "hubs", "degree", "param"):
        value = getattr(args, key)
        if value is not None:
            params[key] = value
    try:
        inst = generate(args.model, args.seed, **params)
    except TypeError as exc:
        raise UsageError(f"bad parameters for {args.model}: {exc}") from None
    _emit(write_gkf(inst), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="trikern", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_file(p):
        p.add_argument("file", help="GKF instance ('-' for stdin)")
        p.add_argument("--param", choices=[k.value for k in ParamKind], help="override the file's parameter")

    def with_budget(p):
        p.add_argument("--edge-budget", choices=["paper", "exact"], default="exact")

    p = sub.add_parser("solve", help="decide an instance")
    with_file(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("stats", help="print n, m and the three parameters")
    with_file(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("diminish", help="apply the matching diminisher")
    with_file(p)
    with_budget(p)
    p.add_argument("--rounds", type=int, default=1)
    p.add_argument("--out", help="reduced instance (default stdout)")
    p.add_argument("--provenance", help="write the provenance sidecar here")
    p.add_argument("--csv", help="per-round statistics")
    p.add_argument("--timing", action="store_true", help="fill the ms column")
    p.set_defaults(func=cmd_diminish)

    p = sub.add_parser("interleave", help="solve by alternating kernel and diminisher")
    with_file(p)
    with_budget(p)
    p.add_argument("--eps", default="2")
    p.add_argument("--rounds", type=int, default=None, help="give up after this many diminish rounds")
    p.add_argument("--csv", help="per-round statistics")
    p.add_argument("--timing", action="store_true", help="fill the ms column")
    p.set_defaults(func=cmd_interleave)

    p = sub.add_parser("turing", help="decide hsi through ball subinstances")
    p.add_argument("file")
    p.add_argument("--early-exit", action="store_true")
    p.set_defaults(func=cmd_turing)

    p = sub.add_parser("verify", help="run the seeded property suite")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--trials", type=int, default=300)
    p.add_argument("--show", type=int, default=5, help="violations to print per check")
    p.add_argument("--csv")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="write a random instance")
    p.add_argument("model", choices=sorted(MODELS))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--f", type=int)
    p.add_argument("--plant", action=argparse.BooleanOptionalAction, default=None)
    p.add_argument("--wmin", type=int)
    p.add_argument("--wmax", type=int)
    p.add_argument("--problem", choices=[k.value for k in ProblemKind])
    p.add_argument("--pattern")
    p.add_argument("--hubs", type=int)
    p.add_argument("--degree", type=int)
    p.add_argument("--param", choices=[k.value for k in ParamKind])
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GkfError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (UsageError, GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
