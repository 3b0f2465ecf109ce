"""Command line front end: ``lazymc solve|verify|stats|bench``."""
from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import asdict

from .driver import SolverConfig, lazy_mc, must_may_stats
from .graph import GraphParseError, first_non_edge, load_graph
from .setops import HopscotchSet, intersect_gt, intersect_size_gt_bool, intersect_size_gt_val

EXIT_OK = 0
EXIT_NOT_CLIQUE = 1
EXIT_USAGE = 2
EXIT_MISSING_FILE = 3
EXIT_PARSE_ERROR = 4
EXIT_TIMEOUT = 5


def _load(args):
    return load_graph(args.input, args.format)


def _config(args) -> SolverConfig:
    return SolverConfig(threads=args.threads, phi=args.phi, top_k=args.top_k,
                        prepopulate=args.prepopulate, seed=args.seed, timeout=args.timeout)


def run_result(G, cfg: SolverConfig) -> dict:
    omega, clique, report = lazy_mc(G, cfg)
    rep = report.to_dict()
    return {
        "omega": omega,
        "exact": rep.pop("exact"),
        "clique": sorted(int(G.labels[v]) for v in clique),
        "config": asdict(cfg),
        "phases": rep["phases"],
        "filters": rep["filters"],
        "dispatch": rep["dispatch"],
        "heuristics": rep["heuristic_sizes"],
        "degeneracy": rep["degeneracy"],
    }


def cmd_solve(args) -> int:
    G = _load(args)
    result = run_result(G, _config(args))
    print(f"omega={result['omega']}")
    print("clique=" + " ".join(map(str, result["clique"])))
    if not result["exact"]:
        print("timeout: result is a lower bound", file=sys.stderr)
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(result, fh, indent=2)
    return EXIT_OK if result["exact"] else EXIT_TIMEOUT


def cmd_verify(args) -> int:
    G = _load(args)
    with open(args.clique) as fh:
        ids = _read_ids(fh.read())
    index = {int(lab): v for v, lab in enumerate(G.labels.tolist())}
    missing = [x for x in ids if x not in index]
    if missing:
        print(f"FAIL: vertex {missing[0]} not in graph")
        return EXIT_NOT_CLIQUE
    bad = first_non_edge(G, [index[x] for x in ids])
    if bad is not None:
        u, v = (int(G.labels[x]) for x in bad)
        print(f"FAIL: ({u}, {v}) not adjacent")
        return EXIT_NOT_CLIQUE
    print(f"PASS: {len(ids)} vertices form a clique")
    return EXIT_OK


def _read_ids(text: str) -> list[int]:
    """Vertex ids from a clique file; accepts ``solve`` output as-is."""
    ids = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#") or line.startswith("omega="):
            continue
        if line.startswith("clique="):
            line = line[len("clique="):]
        ids.extend(int(t) for t in line.replace(",", " ").split())
    return ids


def cmd_stats(args) -> int:
    G = _load(args)
    omega = args.omega
    if omega is None:
        omega, _, _ = lazy_mc(G, SolverConfig(threads=args.threads))
    stats = must_may_stats(G, omega)
    for key, val in stats.items():
        print(f"{key}={val!r}")
    return EXIT_OK


def cmd_bench(args) -> int:
    rng = random.Random(args.seed)
    cases = []
    for _ in range(args.trials):
        universe = range(args.universe)
        A = sorted(rng.sample(universe, args.size))
        B = HopscotchSet(rng.sample(universe, args.size))
        cases.append((A, B))
    buf = [0] * args.size
    theta = int(args.size * args.theta)
    ops = {
        "intersect_gt": lambda A, B, ee: intersect_gt(A, B, buf, theta, ee),
        "intersect_size_gt_val": lambda A, B, ee: intersect_size_gt_val(A, B, theta, ee),
        "intersect_size_gt_bool": lambda A, B, ee: intersect_size_gt_bool(A, B, theta, ee),
    }
    for name, op in ops.items():
        for ee in (True, False):
            t0 = time.perf_counter()
            for A, B in cases:
                op(A, B, ee)
            dt = time.perf_counter() - t0
            print(f"{name} early_exit={ee}: {dt * 1e6 / len(cases):.2f} us/op")
    return EXIT_OK


def _ratio(text: str) -> float:
    x = float(text)
    if not 0.0 <= x <= 1.0:
        raise argparse.ArgumentTypeError("must lie in [0, 1]")
    return x


def _positive(text: str) -> int:
    x = int(text)
    if x < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return x


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lazymc", description="Exact maximum clique search.")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_args(sp):
        sp.add_argument("--input", required=True)
        sp.add_argument("--format", choices=("edgelist", "binary"), default="edgelist")

    s = sub.add_parser("solve", help="compute the maximum clique")
    graph_args(s)
    s.add_argument("--threads", type=_positive, default=1)
    s.add_argument("--phi", type=_ratio, default=0.1)
    s.add_argument("--top-k", type=_positive, default=64)
    s.add_argument("--prepopulate", choices=("must", "all", "none"), default="must")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--timeout", type=float, default=None)
    s.add_argument("--json", default=None)
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="check that listed vertices form a clique")
    graph_args(v)
    v.add_argument("--clique", required=True)
    v.set_defaults(func=cmd_verify)

    st = sub.add_parser("stats", help="must/may subgraph characterization")
    graph_args(st)
    st.add_argument("--omega", type=int, default=None)
    st.add_argument("--threads", type=_positive, default=1)
    st.set_defaults(func=cmd_stats)

    b = sub.add_parser("bench", help="micro-benchmark the early-exit intersections")
    b.add_argument("--size", type=_positive, default=256)
    b.add_argument("--universe", type=_positive, default=1024)
    b.add_argument("--theta", type=_ratio, default=0.5)
    b.add_argument("--trials", type=_positive, default=2000)
    b.add_argument("--seed", type=int, default=0)
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISSING_FILE
    except GraphParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
