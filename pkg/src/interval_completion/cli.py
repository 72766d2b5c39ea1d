"""Command-line interface.

Exit codes: 0 yes (completion found / graph is interval), 1 no, 2 input or usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
import time
from dataclasses import dataclass

from .graph import Graph, ParseError, parse_graph
from .interval import recognize
from .obstructions import AsteroidalWitness, Hole, branch_edges, find_obstruction, minimal_hole_fills
from .oracle import brute_min_completion
from . import generators as gen
from .solver import SolverConfig, minimum_completion, solve

EXIT_YES, EXIT_NO, EXIT_INPUT = 0, 1, 2

FAMILIES = ("cycle", "small-aw", "long-aw", "random-interval-plus-e-edges", "random-interval-minus-e-edges")
CSV_HEADER = ["instance", "n", "m", "k_min", "nodes", "leaves", "ms", "oracle_ms"]


@dataclass(frozen=True)
class RunConfig:
    command: str
    input: str | None = None
    format: str = "edge-list"
    k: int | None = None
    minimum: bool = False
    seed: int = 0
    parallel: bool = False
    json: bool = False
    timing: bool = True
    debug: bool = False


class InputError(Exception):
    pass


def read_graph(path: str, fmt: str) -> Graph:
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="ascii", errors="strict").read()
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    try:
        return parse_graph(text, fmt)
    except ParseError as exc:
        raise InputError(f"{path}: {exc}") from None


def _dump(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True)


def _edges(es) -> list[list[int]]:
    return [list(e) for e in sorted(es)]


def certificate(g: Graph) -> dict:
    model = recognize(g)
    if model is not None:
        return {"type": "model", "intervals": {str(v): list(lr) for v, lr in sorted(model.intervals.items())}}
    obs = find_obstruction(g)
    if isinstance(obs, Hole):
        return {"type": "hole", "vertices": list(obs.vertices),
                "fills": [_edges(f) for f in minimal_hole_fills(obs)]}
    assert isinstance(obs, AsteroidalWitness)
    roles = dict(obs.roles)
    if obs.base:
        roles["h"], roles["t"] = obs.base[0], obs.base[-1]
    return {"type": "aw", "kind": obs.kind.value, "vertices": list(obs.vertices),
            "roles": dict(sorted(roles.items())), "base": list(obs.base),
            "branch_edges": _edges(branch_edges(obs))}


def cmd_solve(cfg: RunConfig, out) -> int:
    g = read_graph(cfg.input, cfg.format)
    scfg = SolverConfig(debug=cfg.debug, parallel=cfg.parallel)
    if cfg.minimum:
        result = minimum_completion(g, scfg)
    else:
        if cfg.k is None:
            raise InputError("solve needs --k N or --min")
        result = solve(g, cfg.k, scfg)
    if result is None:
        out.write(_dump({"answer": "no"}) + "\n" if cfg.json else "no\n")
        return EXIT_NO
    if cfg.json:
        out.write(_dump(result.as_dict(timing=cfg.timing)) + "\n")
    else:
        out.write(f"yes {result.size}\n")
        for u, v in sorted(result.edges):
            out.write(f"{u} {v}\n")
    return EXIT_YES


def cmd_recognize(cfg: RunConfig, out) -> int:
    g = read_graph(cfg.input, cfg.format)
    model = recognize(g)
    if cfg.json:
        body = {"interval": model is not None}
        if model is not None:
            body["intervals"] = {str(v): list(lr) for v, lr in sorted(model.intervals.items())}
        out.write(_dump(body) + "\n")
    elif model is None:
        out.write("not interval\n")
    else:
        out.write("interval\n" + "".join(line + "\n" for line in model.lines()))
    return EXIT_YES if model is not None else EXIT_NO


def cmd_certify(cfg: RunConfig, out) -> int:
    cert = certificate(read_graph(cfg.input, cfg.format))
    out.write(_dump(cert) + "\n")
    return EXIT_YES if cert["type"] == "model" else EXIT_NO


def cmd_oracle(cfg: RunConfig, out) -> int:
    g = read_graph(cfg.input, cfg.format)
    res = brute_min_completion(g, enumerate_all=True)
    body = res.as_dict()
    if not cfg.timing:
        body["stats"].pop("ms")
    if cfg.k is not None and res.min_size > cfg.k:
        out.write(_dump({"answer": "no", "k_min": res.min_size}) + "\n")
        return EXIT_NO
    out.write(_dump(body) + "\n")
    return EXIT_YES


def cmd_fills(length: int, out, as_json: bool) -> int:
    if length < 4:
        raise InputError("a hole has at least 4 vertices")
    fills = minimal_hole_fills(tuple(range(length)))
    if as_json:
        out.write(_dump({"length": length, "count": len(fills), "fills": [_edges(f) for f in fills]}) + "\n")
    else:
        out.write(f"{len(fills)}\n")
        for f in fills:
            out.write(" ".join(f"{u}-{v}" for u, v in sorted(f)) + "\n")
    return EXIT_YES


def bench_instances(family: str, sizes: list[int], seed: int, count: int) -> list[tuple[str, Graph]]:
    """Deterministic instance list for a family."""
    rng = random.Random(seed)
    out = []
    if family == "cycle":
        out = [(f"cycle-{n}", gen.cycle(n)) for n in sizes]
    elif family == "small-aw":
        out = [(name, lab.graph) for name, lab in gen.small_aw_templates().items()]
    elif family == "long-aw":
        for d in sizes:
            out.append((f"dagger-{d}", gen.dagger_aw(d).graph))
            out.append((f"double-dagger-{d}", gen.double_dagger_aw(d).graph))
    elif family in ("random-interval-plus-e-edges", "random-interval-minus-e-edges"):
        for n in sizes:
            for i in range(count):
                base = gen.random_interval_graph(n, rng)
                e = rng.randint(1, 3)
                if family.endswith("plus-e-edges"):
                    g = gen.perturb(base, e, 0, rng)
                else:
                    g = gen.perturb(base, 0, e, rng)
                out.append((f"{family}-{n}-{i}", g))
    else:
        raise InputError(f"unknown family {family!r}")
    return out


def cmd_bench(family: str, sizes: list[int], seed: int, count: int, oracle_limit: int,
              cfg: RunConfig, out) -> int:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    scfg = SolverConfig(debug=cfg.debug, parallel=cfg.parallel)
    for name, g in bench_instances(family, sizes, seed, count):
        k_min = minimum_completion(g, scfg).size
        t0 = time.perf_counter()
        run = solve(g, k_min, scfg)
        ms = (time.perf_counter() - t0) * 1000
        oracle_ms = "skipped"
        if g.n <= oracle_limit:
            res = brute_min_completion(g)
            if res.min_size != k_min:
                raise AssertionError(f"{name}: solver {k_min} != oracle {res.min_size}")
            oracle_ms = f"{res.ms:.3f}" if cfg.timing else "-"
        writer.writerow([name, g.n, g.m, k_min, run.stats.nodes, run.stats.leaves,
                         f"{ms:.3f}" if cfg.timing else "-", oracle_ms])
    return EXIT_YES


def _sizes(text: str) -> list[int]:
    if ".." in text:
        a, b = text.split("..")
        return list(range(int(a), int(b) + 1))
    return [int(x) for x in text.split(",") if x]


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="interval-completion", description="Exact interval completion solver.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, with_input=True):
        if with_input:
            sp.add_argument("input", help="graph file, or - for standard input")
            sp.add_argument("--format", choices=["graph6", "edge-list"], default="edge-list")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.add_argument("--no-timing", action="store_true", help="omit wall-clock fields (byte-identical output)")
        sp.add_argument("--debug", action="store_true", help="check search invariants at every node")

    sp = sub.add_parser("solve", help="find at most k insertions, or report none")
    common(sp)
    sp.add_argument("--k", type=int)
    sp.add_argument("--min", action="store_true", help="iterative deepening to a minimum completion")
    sp.add_argument("--parallel", action="store_true", help="explore root branches in worker processes")

    sp = sub.add_parser("recognize", help="interval model or 'not interval'")
    common(sp)
    sp = sub.add_parser("certify", help="interval model or a forbidden subgraph as JSON")
    common(sp)
    sp = sub.add_parser("oracle", help="brute-force minimum completion")
    common(sp)
    sp.add_argument("--k", type=int)

    sp = sub.add_parser("fills", help="minimal fills of a hole of the given length")
    sp.add_argument("length", type=int)
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("bench", help="CSV benchmark over a generator family")
    sp.add_argument("--family", choices=FAMILIES, default="cycle")
    sp.add_argument("--sizes", default="4..8", help="a..b or a comma list of per-family size parameters")
    sp.add_argument("--count", type=int, default=3, help="instances per size for random families")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--oracle-limit", type=int, default=12, help="run the oracle up to this many vertices")
    sp.add_argument("--parallel", action="store_true")
    sp.add_argument("--no-timing", action="store_true")
    sp.add_argument("--debug", action="store_true")
    return p


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if getattr(args, "k", None) is not None and args.k < 0:
        print("error: --k must be nonnegative", file=sys.stderr)
        return EXIT_INPUT
    cfg = RunConfig(command=args.command, input=getattr(args, "input", None),
                    format=getattr(args, "format", "edge-list"), k=getattr(args, "k", None),
                    minimum=getattr(args, "min", False), seed=getattr(args, "seed", 0),
                    parallel=getattr(args, "parallel", False), json=getattr(args, "json", False),
                    timing=not getattr(args, "no_timing", False), debug=getattr(args, "debug", False))
    try:
        if args.command == "solve":
            return cmd_solve(cfg, out)
        if args.command == "recognize":
            return cmd_recognize(cfg, out)
        if args.command == "certify":
            return cmd_certify(cfg, out)
        if args.command == "oracle":
            return cmd_oracle(cfg, out)
        if args.command == "fills":
            return cmd_fills(args.length, out, args.json)
        if args.command == "bench":
            return cmd_bench(args.family, _sizes(args.sizes), args.seed, args.count, args.oracle_limit, cfg, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_INPUT


def run(argv: list[str]) -> tuple[int, str]:
    """Run the CLI in-process and capture standard output (for tests)."""
    buf = io.StringIO()
    code = main(argv, buf)
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
