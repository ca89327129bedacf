"""Command line front end: verify, solve, reduce, gen, bench.

Exit codes: 0 yes/solved, 1 no, 2 usage, 3 invalid input or failed
precondition, 4 size guard exceeded.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from pathlib import Path

from .core import (BIPARTITE, MCOIS, MCOS, GraphError, GuardExceeded, PreconditionFailed)
from .instances import (CLASSES, INCLUSION_KINDS, bb_to_ordered, ops_to_disjoint_edges,
                        ops_to_inclusion_class, ops_to_interval_ordered, ops_to_spiders,
                        ops_to_trivially_perfect, random_instance)
from .io import ParseError, format_og, read_og, write_og
from .oracle import OISI, OSI, OpsInstance, brute_mco, brute_ordered_iso
from .orderings import (OrderingKind, nice_decomposition_from_ordering, ordering_pathwidth,
                        verify_ordering)
from .solvers.inclusion import common_inclusion_class, mcois_inclusion
from .solvers.pathwidth import mco_pathwidth
from .solvers.shift import osi_shift_2dor, osi_shift_signed_interval
from .solvers.vertex_cover import minimum_vertex_cover, mco_vertex_cover

EXIT_YES, EXIT_NO, EXIT_USAGE, EXIT_INVALID, EXIT_GUARD = 0, 1, 2, 3, 4

PROBLEMS = {"osi": OSI, "oisi": OISI, "mcos": MCOS, "mcois": MCOIS}
ALGOS = ("auto", "brute", "shift2dor", "shiftmin", "dpinclusion", "dppathwidth", "dpvc")
OPS_TARGETS = ("spider", "tperfect", "edges", "threshold", "chain", "cochain", "interval",
               "interval-bigraph")
BB_TARGETS = ("split", "cobipartite")

# auto only picks a parameterized DP when its parameter is this small
AUTO_PATHWIDTH = 5
AUTO_VC = 5


class UsageError(Exception):
    pass


# solving

class Result:
    """Outcome of one solve: a decision with a map, or a value with pairs."""

    def __init__(self, problem, algo, decision=None, images=None, value=None, pairs=None,
                 states=None):
        self.problem, self.algo = problem, algo
        self.decision, self.images = decision, images
        self.value, self.pairs = value, pairs
        self.states = states

    @property
    def is_decision(self) -> bool:
        return self.problem in (OSI, OISI)

    def summary(self) -> str:
        if self.is_decision:
            return "YES" if self.decision else "NO"
        return str(self.value)

    def lines(self) -> list[str]:
        if self.is_decision:
            if not self.decision:
                return ["NO"]
            return ["YES"] + [f"{i} -> {v}" for i, v in enumerate(self.images, 1)]
        return [f"VALUE {self.value}"] + [f"pair {g} {h}" for g, h in self.pairs]

    def record(self) -> dict:
        rec = {"problem": self.problem.lower(), "algo": self.algo}
        if self.is_decision:
            rec["decision"] = "YES" if self.decision else "NO"
            rec["map"] = list(self.images) if self.decision else None
        else:
            rec["value"] = self.value
            rec["pairs"] = [list(p) for p in self.pairs]
        return rec


def _auto(problem, G, H) -> str:
    if problem == OSI:
        if G.kind == BIPARTITE and not H.directed and \
                verify_ordering(OrderingKind.COMPARABILITY_WEAK, G).ok:
            return "shift2dor"
        if G.directed and H.directed and verify_ordering(OrderingKind.MIN, G).ok:
            return "shiftmin"
        return "brute"
    if problem == OISI:
        return "brute"
    undirected = not G.directed and not H.directed
    if problem == MCOIS and undirected and G.side is not None and H.side is not None:
        try:
            common_inclusion_class(G, H)
            return "dpinclusion"
        except PreconditionFailed:
            pass
    if max(ordering_pathwidth(G), ordering_pathwidth(H)) <= AUTO_PATHWIDTH:
        return "dppathwidth"
    if undirected and max(len(minimum_vertex_cover(G)), len(minimum_vertex_cover(H))) <= AUTO_VC:
        return "dpvc"
    return "brute"


def solve(problem: str, algo: str, G, H, override: bool = False) -> Result:
    """Run one algorithm; raises PreconditionFailed / GuardExceeded / GraphError."""
    if algo == "auto":
        algo = _auto(problem, G, H)
    decision = problem in (OSI, OISI)
    if algo == "brute":
        if decision:
            f = brute_ordered_iso(problem, G, H, override=override)
            return Result(problem, algo, f is not None, f.images if f else None)
        sol = brute_mco(problem, G, H, override=override)
        return Result(problem, algo, value=sol.value, pairs=sol.pairs)
    if algo in ("shift2dor", "shiftmin"):
        if problem != OSI:
            raise PreconditionFailed(f"{algo} decides osi only")
        run = osi_shift_2dor if algo == "shift2dor" else osi_shift_signed_interval
        f, trace = run(G, H)
        return Result(problem, algo, f is not None, f.images if f else None,
                      states=trace.iterations)
    if decision:
        raise PreconditionFailed(f"{algo} solves mcos/mcois only")
    if algo == "dpinclusion":
        if problem != MCOIS:
            raise PreconditionFailed("dpinclusion solves mcois only")
        sol = mcois_inclusion(G, H)
        return Result(problem, algo, value=sol.value, pairs=sol.pairs)
    stats = {}
    if algo == "dppathwidth":
        sol = mco_pathwidth(problem, G, nice_decomposition_from_ordering(G),
                            H, nice_decomposition_from_ordering(H), stats=stats)
        return Result(problem, algo, value=sol.value, pairs=sol.pairs, states=stats["states"])
    if algo == "dpvc":
        if G.directed or H.directed:
            raise PreconditionFailed("dpvc needs undirected graphs")
        sol = mco_vertex_cover(problem, G, H, override=override, stats=stats)
        return Result(problem, algo, value=sol.value, pairs=sol.pairs,
                      states=sum(stats["phi_counts"].values()))
    raise UsageError(f"unknown algo {algo!r}")


# subcommands

def _emit(args, lines, record):
    if args.json:
        print(json.dumps(record, sort_keys=True))
    else:
        print("\n".join(lines))


def cmd_verify(args) -> int:
    G = read_og(args.file)
    try:
        kind = OrderingKind(args.kind.replace("-", "_"))
    except ValueError:
        raise UsageError(f"unknown ordering kind {args.kind!r}") from None
    report = verify_ordering(kind, G)
    _emit(args, [report.line()], {"kind": kind.value, "ok": report.ok,
                                  "witness": list(report.witness) if report.witness else None,
                                  "detail": report.detail})
    return EXIT_YES if report.ok else EXIT_NO


def cmd_solve(args) -> int:
    G, H = read_og(args.gfile), read_og(args.hfile)
    res = solve(PROBLEMS[args.problem], args.algo, G, H, override=args.override)
    _emit(args, res.lines(), res.record())
    if res.is_decision and not res.decision:
        return EXIT_NO
    return EXIT_YES


def _perm(text: str, name: str):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"--{name} must be comma separated integers") from None


def cmd_reduce(args) -> int:
    if args.source == "ops":
        if args.to not in OPS_TARGETS:
            raise UsageError(f"--from ops supports --to {', '.join(OPS_TARGETS)}")
        if args.pi is None or args.rho is None:
            raise UsageError("--from ops needs --pi and --rho")
        inst = OpsInstance(_perm(args.pi, "pi"), _perm(args.rho, "rho"))
        if args.to == "spider":
            red = ops_to_spiders(inst)
        elif args.to == "tperfect":
            red = ops_to_trivially_perfect(inst)
        elif args.to == "edges":
            red = ops_to_disjoint_edges(inst)
        elif args.to in INCLUSION_KINDS:
            red = ops_to_inclusion_class(args.to, inst, args.drop_mid)
        else:
            red = ops_to_interval_ordered(args.to.replace("-", "_"), inst, args.drop_mid)
    else:
        if args.to not in BB_TARGETS:
            raise UsageError(f"--from bb supports --to {', '.join(BB_TARGETS)}")
        if args.graph is None or args.k is None:
            raise UsageError("--from bb needs --graph and --k")
        red = bb_to_ordered(args.to, read_og(args.graph), args.k)
    prefix = args.out or args.to
    gpath, hpath = Path(f"{prefix}.G.og"), Path(f"{prefix}.H.og")
    write_og(red.G, gpath)
    write_og(red.H, hpath)
    _emit(args, [str(gpath), str(hpath)], {"G": str(gpath), "H": str(hpath),
                                           "reduction": red.provenance["reduction"]})
    return EXIT_YES


def cmd_gen(args) -> int:
    G = random_instance(args.cls, args.n, args.density, args.seed, args.param)
    if args.out:
        write_og(G, args.out)
    else:
        sys.stdout.write(format_og(G))
    return EXIT_YES


def bench_suite(name: str, size: int):
    """Deterministic list of ``(instance, problem, algo, G, H)`` rows."""
    rows = []
    for t in range(size):
        seed = 1000 + t
        if name == "shift":
            G = random_instance("2dor", 40, 0.4, seed)
            H = random_instance("arbitrary", 5, 0.3, seed + 1)
            rows += [(f"2dor-{t}", OSI, a, G, H) for a in ("shift2dor", "brute")]
        elif name == "pathwidth":
            G = random_instance("bounded_pathwidth", 8, 0.5, seed, param=2)
            H = random_instance("bounded_pathwidth", 8, 0.5, seed + 1, param=2)
            rows += [(f"pw-{t}", p, a, G, H) for p in (MCOS, MCOIS)
                     for a in ("dppathwidth", "brute")]
        elif name == "vc":
            G = random_instance("bounded_vc", 8, 0.5, seed, param=2)
            H = random_instance("bounded_vc", 8, 0.5, seed + 1, param=2)
            rows += [(f"vc-{t}", p, a, G, H) for p in (MCOS, MCOIS) for a in ("dpvc", "brute")]
        elif name == "inclusion":
            cls = INCLUSION_KINDS[t % 3]
            G = random_instance(cls, 8, 0.5, seed)
            H = random_instance(cls, 8, 0.5, seed + 1)
            rows += [(f"{cls}-{t}", MCOIS, a, G, H) for a in ("dpinclusion", "brute")]
        else:
            raise UsageError(f"unknown suite {name!r} (shift, pathwidth, vc, inclusion)")
    return rows


BENCH_COLUMNS = ["instance", "problem", "algo", "value_or_decision", "millis", "states_visited"]


def cmd_bench(args) -> int:
    rows = bench_suite(args.suite, args.size)
    with open(args.out, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(BENCH_COLUMNS)
        for inst, problem, algo, G, H in rows:
            start = time.perf_counter()
            res = solve(problem, algo, G, H)
            millis = (time.perf_counter() - start) * 1000
            writer.writerow([inst, problem.lower(), algo, res.summary(), f"{millis:.3f}",
                             "" if res.states is None else res.states])
    if args.json:
        print(json.dumps({"out": args.out, "rows": len(rows)}))
    else:
        print(f"{len(rows)} rows -> {args.out}")
    return EXIT_YES


# argument parsing

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ordsub", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    p = add("verify", "check a vertex ordering")
    p.add_argument("--kind", required=True, help=", ".join(k.value for k in OrderingKind))
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = add("solve", "solve osi/oisi/mcos/mcois")
    p.add_argument("--problem", required=True, choices=sorted(PROBLEMS))
    p.add_argument("--algo", default="auto", choices=ALGOS)
    p.add_argument("--override", action="store_true", help="lift the exponential size guards")
    p.add_argument("gfile")
    p.add_argument("hfile")
    p.set_defaults(func=cmd_solve)

    p = add("reduce", "build an instance pair from a hardness reduction")
    p.add_argument("--from", dest="source", required=True, choices=("ops", "bb"))
    p.add_argument("--to", required=True, choices=OPS_TARGETS + BB_TARGETS)
    p.add_argument("--pi")
    p.add_argument("--rho")
    p.add_argument("--graph", help="bipartite .og file (--from bb)")
    p.add_argument("--k", type=int)
    p.add_argument("--drop-mid", action="store_true")
    p.add_argument("--out", help="output prefix; writes PREFIX.G.og and PREFIX.H.og")
    p.set_defaults(func=cmd_reduce)

    p = add("gen", "seeded random graph of a class")
    p.add_argument("--class", dest="cls", required=True, choices=CLASSES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--param", type=int, help="width / cover bound for bounded classes")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = add("bench", "time solvers on a built-in suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--size", type=int, default=5)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PreconditionFailed as exc:
        detail = f" ({exc.report.line()})" if exc.report is not None else ""
        print(f"precondition failed: {exc}{detail}", file=sys.stderr)
        return EXIT_INVALID
    except (ParseError, GraphError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except GuardExceeded as exc:
        print(f"guard exceeded: {exc}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
