"""Command-line front door: parse instances, detect classes, dispatch
solvers, verify, kernelize, reduce, and generate.

Instance file format (1-based vertex ids on disk, 0-based in memory):

    c free-form comment lines, allowed anywhere
    p rtvd <n> <m> <k> <ell>
    a <u> <v>          (exactly m arc lines)

Exit codes: 0 YES/success, 1 NO/infeasible, 2 parse error,
3 precondition or unsupported input, 4 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import math
import sys
import time
from dataclasses import dataclass

from . import bounded, generators, hitting, kernel, reductions
from .acyclic_local import min_rtvd_alt
from .digraph import (
    Digraph,
    is_acyclic,
    is_connected,
    independence_number,
    is_in_tournament,
    is_local_tournament,
    is_out_tournament,
    is_tournament,
    reach_profile,
    reverse,
)
from .errors import (
    CapExceededError,
    GraphClassError,
    InstanceParseError,
    RtvdError,
)
from .oracle import Instance, Solution, decide_rtvd_oracle, verify_solution

EXIT_YES = 0
EXIT_NO = 1
EXIT_PARSE = 2
EXIT_UNSUPPORTED = 3
EXIT_CAP = 4

_ALPHA_ENGINE_BUDGET = 200_000


# ---------------------------------------------------------------------------
# instance files


def parse_instance_text(text: str) -> Instance:
    n = m = k = ell = None
    arcs = []
    seen = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise InstanceParseError(line_no, "duplicate header line")
            if len(fields) != 6 or fields[1] != "rtvd":
                raise InstanceParseError(line_no, "expected 'p rtvd n m k ell'")
            try:
                n, m, k, ell = (int(x) for x in fields[2:])
            except ValueError:
                raise InstanceParseError(line_no, "non-integer header field")
            if n < 0 or m < 0 or k < 0 or ell < 0:
                raise InstanceParseError(line_no, "negative header field")
        elif fields[0] == "a":
            if n is None:
                raise InstanceParseError(line_no, "arc line before header")
            if len(fields) != 3:
                raise InstanceParseError(line_no, "expected 'a u v'")
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise InstanceParseError(line_no, "non-integer arc endpoint")
            if not (1 <= u <= n and 1 <= v <= n):
                raise InstanceParseError(line_no, f"vertex id outside 1..{n}")
            if u == v:
                raise InstanceParseError(line_no, "self-loop")
            if (u, v) in seen:
                raise InstanceParseError(line_no, f"duplicate arc {u} -> {v}")
            seen.add((u, v))
            arcs.append((u - 1, v - 1))
        else:
            raise InstanceParseError(line_no, f"unknown line type {fields[0]!r}")
    if n is None:
        raise InstanceParseError(1, "missing header line")
    if len(arcs) != m:
        raise InstanceParseError(1, f"header promises {m} arcs, found {len(arcs)}")
    if k > n:
        raise InstanceParseError(1, "deletion budget exceeds vertex count")
    return Instance(digraph=Digraph(n, arcs), k=k, ell=ell)


def emit_instance(inst: Instance, comments=()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p rtvd {inst.digraph.n} {inst.digraph.m} {inst.k} {inst.ell}")
    for u, v in sorted(inst.digraph.arcs):
        lines.append(f"a {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


def parse_instance_file(path: str) -> Instance:
    with open(path) as fh:
        return parse_instance_text(fh.read())


@dataclass
class SolutionReport:
    status: str  # YES / NO / UNKNOWN
    engine: str
    elapsed_ms: float
    instance: Instance
    deleted: tuple[int, ...] = ()  # 1-based, sorted
    remaining: tuple[tuple[int, int], ...] = ()  # 1-based arcs
    note: str = ""

    def render(self) -> str:
        lines = [
            f"status {self.status}",
            f"engine {self.engine}",
            f"elapsed_ms {self.elapsed_ms:.1f}",
            f"n {self.instance.digraph.n}",
            f"m {self.instance.digraph.m}",
            f"k {self.instance.k}",
            f"ell {self.instance.ell}",
        ]
        if self.note:
            lines.append(f"note {self.note}")
        if self.status == "YES":
            lines.append(f"remaining_count {len(self.remaining)}")
            for u, v in self.remaining:
                lines.append(f"transitive {u} {v}")
            ids = " ".join(str(v) for v in self.deleted)
            lines.append(f"deleted {ids}" if ids else "deleted")
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# engines


def _decide_with_min_solver(inst: Instance, solver) -> tuple[str, Solution | None, str]:
    best = solver(inst.digraph, inst.ell)
    if best.size <= inst.k:
        return "YES", best, ""
    return "NO", None, f"minimum deletion size is {best.size}"


def _run_engine(name: str, inst: Instance, alpha: int | None):
    D = inst.digraph
    if name == "oracle":
        ok, sol = decide_rtvd_oracle(inst)
        return ("YES", sol, "") if ok else ("NO", None, "oracle exhausted all subsets")
    if name == "tournament":
        return _decide_with_min_solver(inst, bounded.solve_tournament)
    if name == "alt":
        return _decide_with_min_solver(inst, min_rtvd_alt)
    if name == "alpha":
        if alpha is None:
            alpha = independence_number(D)
        return _decide_with_min_solver(
            inst, lambda d, ell: bounded.solve_alpha_bounded(d, alpha, ell)
        )
    if name == "hitting":
        if inst.ell != 0:
            raise GraphClassError("hitting engine requires ell = 0")
        sol = hitting.tvd_in_tournament(D, inst.k)
        if sol is None:
            return "NO", None, f"no transitive-free deletion of size <= {inst.k}"
        return "YES", sol, ""
    raise ValueError(f"unknown engine {name!r}")


def _alpha_engine_applicable(D: Digraph, ell: int, alpha: int | None):
    try:
        a = alpha if alpha is not None else independence_number(D)
    except CapExceededError:
        return None
    cap = min(D.n, bounded.alpha_retain_cap(a, ell).cap)
    # the solver may sweep every retained set of size <= cap
    work = sum(math.comb(D.n, r) for r in range(cap + 1))
    if work > _ALPHA_ENGINE_BUDGET:
        return None
    return a


def _auto_engine(inst: Instance, alpha: int | None):
    D = inst.digraph
    if is_tournament(D):
        return "tournament", alpha
    try:
        reach_profile(D)
        return "alt", alpha
    except RtvdError:
        pass
    if inst.ell == 0 and (is_in_tournament(D) or is_out_tournament(D)):
        return "hitting", alpha
    a = _alpha_engine_applicable(D, inst.ell, alpha)
    if a is not None:
        return "alpha", a
    if D.n <= 14:
        return "oracle", alpha
    return None, alpha


def cmd_solve(args) -> int:
    inst = parse_instance_file(args.path)
    if args.k is not None:
        inst = Instance(digraph=inst.digraph, k=args.k, ell=inst.ell)
    if args.ell is not None:
        inst = Instance(digraph=inst.digraph, k=inst.k, ell=args.ell)
    start = time.perf_counter()
    engine = args.engine
    if engine == "auto":
        engine, alpha = _auto_engine(inst, args.alpha)
        if engine is None:
            report = SolutionReport(
                status="UNKNOWN",
                engine="none",
                elapsed_ms=(time.perf_counter() - start) * 1000,
                instance=inst,
                note=(
                    "no specialized engine applies and the instance exceeds "
                    "the brute-force cap; no general-digraph algorithm is provided"
                ),
            )
            sys.stdout.write(report.render())
            return EXIT_UNSUPPORTED
    else:
        alpha = args.alpha
    status, sol, note = _run_engine(engine, inst, alpha)
    elapsed = (time.perf_counter() - start) * 1000
    if status == "YES":
        ok, cert = verify_solution(inst, sol.deleted)
        if not ok:
            raise AssertionError("engine produced an unverifiable solution")
        report = SolutionReport(
            status="YES",
            engine=engine,
            elapsed_ms=elapsed,
            instance=inst,
            deleted=tuple(sorted(v + 1 for v in sol.deleted)),
            remaining=tuple((u + 1, v + 1) for u, v in cert),
        )
        sys.stdout.write(report.render())
        return EXIT_YES
    report = SolutionReport(
        status="NO", engine=engine, elapsed_ms=elapsed, instance=inst, note=note
    )
    sys.stdout.write(report.render())
    return EXIT_NO


def cmd_verify(args) -> int:
    inst = parse_instance_file(args.path)
    ids = []
    if args.solution.strip():
        for part in args.solution.split(","):
            try:
                ids.append(int(part))
            except ValueError:
                raise InstanceParseError(1, f"bad solution id {part!r}")
    if any(not 1 <= v <= inst.digraph.n for v in ids):
        raise InstanceParseError(1, "solution id outside 1..n")
    ok, cert = verify_solution(inst, [v - 1 for v in ids])
    sys.stdout.write(f"status {'OK' if ok else 'VIOLATION'}\n")
    sys.stdout.write(f"deleted_count {len(ids)}\n")
    sys.stdout.write(f"remaining_count {len(cert)}\n")
    for u, v in cert:
        sys.stdout.write(f"transitive {u + 1} {v + 1}\n")
    return EXIT_YES if ok else EXIT_NO


def cmd_kernelize(args) -> int:
    inst = parse_instance_file(args.path)
    D = inst.digraph
    flipped = False
    if not is_in_tournament(D):
        if is_out_tournament(D):
            D = reverse(D)
            flipped = True
        else:
            raise GraphClassError(
                "kernelization requires an in-tournament or out-tournament"
            )
    provider = (
        kernel.whole_graph_provider if args.provider == "trivial" else kernel.flow_provider
    )
    packing = kernel.greedy_packing(D, inst.k, inst.ell)
    if packing is None:
        sys.stdout.write("status NO\n")
        sys.stdout.write("note disjoint-triangle packing exceeds ell + k + 1\n")
        return EXIT_NO
    kern = kernel.assemble_kernel(D, inst.k, inst.ell, provider)
    out_digraph = reverse(kern.digraph) if flipped else kern.digraph
    kern = Instance(digraph=out_digraph, k=kern.k, ell=kern.ell)
    comments = [
        f"kernel of {args.path} (provider={args.provider})",
        f"original n={inst.digraph.n} m={inst.digraph.m}; "
        f"kernel n={kern.digraph.n} m={kern.digraph.m}; "
        f"packing={len(packing.triangles)}",
    ]
    _write_output(emit_instance(kern, comments), args.output)
    return EXIT_YES


def _parse_vc_file(path: str) -> reductions.UndirectedGraph:
    n = m = None
    edges = []
    with open(path) as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("c"):
                continue
            fields = line.split()
            if fields[0] == "p":
                if len(fields) != 4 or fields[1] != "vcg":
                    raise InstanceParseError(line_no, "expected 'p vcg n m'")
                n, m = int(fields[2]), int(fields[3])
            elif fields[0] == "e":
                if n is None:
                    raise InstanceParseError(line_no, "edge before header")
                u, v = int(fields[1]), int(fields[2])
                if not (1 <= u <= n and 1 <= v <= n):
                    raise InstanceParseError(line_no, f"vertex id outside 1..{n}")
                edges.append((u - 1, v - 1))
            else:
                raise InstanceParseError(line_no, f"unknown line type {fields[0]!r}")
    if n is None:
        raise InstanceParseError(1, "missing header line")
    if len(edges) != m:
        raise InstanceParseError(1, f"header promises {m} edges, found {len(edges)}")
    return reductions.UndirectedGraph.build(n, edges)


def _parse_multicut_file(path: str) -> reductions.MulticutInstance:
    n = m = r = k = None
    arcs = []
    pairs = []
    with open(path) as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("c"):
                continue
            fields = line.split()
            if fields[0] == "p":
                if len(fields) != 6 or fields[1] != "mcut":
                    raise InstanceParseError(line_no, "expected 'p mcut n m r k'")
                n, m, r, k = (int(x) for x in fields[2:])
            elif fields[0] == "a":
                u, v = int(fields[1]), int(fields[2])
                arcs.append((u - 1, v - 1))
            elif fields[0] == "t":
                s, t = int(fields[1]), int(fields[2])
                pairs.append((s - 1, t - 1))
            else:
                raise InstanceParseError(line_no, f"unknown line type {fields[0]!r}")
    if n is None:
        raise InstanceParseError(1, "missing header line")
    if len(arcs) != m or len(pairs) != r:
        raise InstanceParseError(1, "arc/terminal counts disagree with header")
    try:
        return reductions.MulticutInstance(
            dag=Digraph(n, arcs), terminals=tuple(pairs), k=k
        )
    except (ValueError, RtvdError) as exc:
        raise InstanceParseError(1, f"invalid multicut instance: {exc}")


def cmd_reduce(args) -> int:
    if args.source == "vc":
        G = _parse_vc_file(args.path)
        inst = reductions.vc_to_rtvd(G, args.k, args.ell)
        comments = [
            f"reduction=vertex-cover source={args.path} k={args.k} ell={args.ell}",
            f"source graph: n={G.n} m={len(G.edges)}",
        ]
    else:
        mc = _parse_multicut_file(args.path)
        inst = reductions.multicut_to_tvd(mc)
        comments = [
            f"reduction=multicut source={args.path} k={mc.k} pairs={len(mc.terminals)}",
            f"source dag: n={mc.dag.n} m={mc.dag.m}",
        ]
    _write_output(emit_instance(inst, comments), args.output)
    return EXIT_YES


def cmd_generate(args) -> int:
    cls = args.graph_class
    if cls == "tournament":
        D = generators.gen_tournament(args.n, args.seed)
        detail = f"class=tournament n={args.n} seed={args.seed}"
    elif cls == "alt":
        if args.reach:
            r = tuple(int(x) - 1 for x in args.reach.split(","))
            rf = generators.ReachFunction(r=r)
        else:
            rf = generators.random_reach_function(args.n, args.seed)
        D = generators.gen_acyclic_local_tournament(rf)
        detail = f"class=alt reach={','.join(str(x + 1) for x in rf.r)}"
    elif cls in ("in", "out"):
        gen = generators.gen_in_tournament if cls == "in" else generators.gen_out_tournament
        D = gen(args.n, args.seed, p=args.p, structured=args.structured)
        detail = f"class={cls}-tournament n={args.n} seed={args.seed}"
    elif cls == "dag":
        D = generators.gen_dag(args.n, args.p, args.seed)
        detail = f"class=dag n={args.n} p={args.p} seed={args.seed}"
    else:
        raise ValueError(f"unknown class {cls!r}")
    inst = Instance(digraph=D, k=min(args.k, D.n), ell=args.ell)
    _write_output(emit_instance(inst, [f"generated {detail}"]), args.output)
    return EXIT_YES


def cmd_recognize(args) -> int:
    inst = parse_instance_file(args.path)
    D = inst.digraph
    acyclic = is_acyclic(D)
    local = is_local_tournament(D)
    connected = is_connected(D)
    rows = [
        ("tournament", is_tournament(D)),
        ("in-tournament", is_in_tournament(D)),
        ("out-tournament", is_out_tournament(D)),
        ("local-tournament", local),
        ("acyclic", acyclic),
        ("connected", connected),
        ("acyclic-local-tournament", acyclic and local and connected),
    ]
    for name, value in rows:
        sys.stdout.write(f"{name}: {'yes' if value else 'no'}\n")
    return EXIT_YES


def _write_output(text: str, path: str | None):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rtvd",
        description="Exact solvers for relaxed transitive-free vertex deletion.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve an instance file")
    p.add_argument("path")
    p.add_argument(
        "--engine",
        choices=["auto", "oracle", "tournament", "alpha", "alt", "hitting"],
        default="auto",
    )
    p.add_argument("--alpha", type=int, default=None)
    p.add_argument("--k", type=int, default=None, help="override deletion budget")
    p.add_argument("--ell", type=int, default=None, help="override arc budget")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a candidate deletion set")
    p.add_argument("path")
    p.add_argument("--solution", required=True, help="comma-separated 1-based ids")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("kernelize", help="shrink an in-/out-tournament instance")
    p.add_argument("path")
    p.add_argument("--provider", choices=["trivial", "flow"], default="trivial")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_kernelize)

    p = sub.add_parser("reduce", help="build an instance from another problem")
    p.add_argument("--from", dest="source", choices=["vc", "multicut"], required=True)
    p.add_argument("path")
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--ell", type=int, default=0)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("generate", help="emit a seeded instance of a graph class")
    p.add_argument(
        "--class",
        dest="graph_class",
        choices=["tournament", "alt", "in", "out", "dag"],
        required=True,
    )
    p.add_argument("-n", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p", type=float, default=0.3)
    p.add_argument("--reach", default=None, help="comma-separated 1-based reach values")
    p.add_argument("--structured", action="store_true")
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--ell", type=int, default=0)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("recognize", help="report graph-class membership")
    p.add_argument("path")
    p.set_defaults(func=cmd_recognize)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InstanceParseError as exc:
        sys.stderr.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except FileNotFoundError as exc:
        sys.stderr.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except GraphClassError as exc:
        sys.stderr.write(f"unsupported input: {exc}\n")
        return EXIT_UNSUPPORTED
    except CapExceededError as exc:
        sys.stderr.write(f"resource cap: {exc}\n")
        return EXIT_CAP
    except (ValueError, RtvdError) as exc:
        sys.stderr.write(f"unsupported input: {exc}\n")
        return EXIT_UNSUPPORTED


if __name__ == "__main__":
    sys.exit(main())
