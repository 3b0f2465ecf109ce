"""The full pipeline: heuristics, ordering, lazy graph and systematic search."""
from __future__ import annotations

import random
import sys
import threading
import time
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field

import numpy as np

from .graph import CsrGraph, induced_subgraph
from .heuristics import _run, coreness_heuristic, degree_heuristic
from .incumbent import Incumbent
from .lazygraph import LazyGraph
from .ordering import determine_sort_order, kcore, right_neighborhood
from .setops import intersect_size_gt_bool, intersect_size_gt_val
from .subsolvers import max_clique_via_kvc, mc_branch_bound

MC = "mc"
KVC = "kvc"


@dataclass
class SolverConfig:
    threads: int = 1
    phi: float = 0.1
    top_k: int = 64
    prepopulate: str = "must"
    seed: int = 0
    timeout: float | None = None
    random_level_seed: bool = False
    # ablation switches; all on in normal runs
    heuristics: bool = True
    filters: bool = True
    early_exit: bool = True
    coloring: bool = True
    kernels: bool = True
    kcore_method: str = "rounds"

    def __post_init__(self):
        if not 0.0 <= self.phi <= 1.0:
            raise ValueError(f"phi must lie in [0, 1], got {self.phi}")
        if self.threads < 1:
            raise ValueError("threads must be >= 1")
        if self.top_k < 1:
            raise ValueError("top_k must be >= 1")
        if self.prepopulate not in ("must", "all", "none"):
            raise ValueError(f"unknown prepopulate policy {self.prepopulate!r}")


PHASES = ("degree_heuristic", "kcore", "ordering", "prepopulate",
          "coreness_heuristic", "systematic_search")


@dataclass
class PhaseReport:
    phases: dict = field(default_factory=lambda: {p: 0.0 for p in PHASES})
    filters: dict = field(default_factory=lambda: {"gate": 0, "f1": 0, "f2": 0, "f3": 0})
    dispatch: dict = field(default_factory=lambda: {MC: 0, KVC: 0})
    heuristic_sizes: dict = field(default_factory=dict)
    degeneracy: int = 0
    exact: bool = True

    def __post_init__(self):
        self._lock = threading.Lock()

    def count(self, table: str, key: str) -> None:
        with self._lock:
            getattr(self, table)[key] += 1

    @contextmanager
    def timed(self, phase: str):
        t0 = time.perf_counter()
        try:
            yield
        finally:
            self.phases[phase] += time.perf_counter() - t0

    def to_dict(self) -> dict:
        return {k: v for k, v in asdict(self).items() if not k.startswith("_")}


class _Deadline:
    def __init__(self, timeout: float | None):
        self.at = None if timeout is None else time.monotonic() + timeout

    def expired(self) -> bool:
        return self.at is not None and time.monotonic() > self.at


def choose_algorithm(m_hat: int, n: int, phi: float) -> str:
    """Vertex cover on the complement for dense neighborhoods, else clique search."""
    if n <= 1:
        return MC
    return KVC if m_hat / n / (n - 1) > phi else MC


def neighbor_search(H: LazyGraph, v: int, cfg: SolverConfig, incumbent: Incumbent,
                    report: PhaseReport | None = None) -> None:
    """Filter the right-neighborhood of ``v`` and search what survives."""
    report = report if report is not None else PhaseReport()
    c = H.c
    ee = cfg.early_exit
    if cfg.filters:
        best = incumbent.size
        N = [u for u in right_neighborhood(H, v) if c[u] >= best]
        if len(N) < best:
            return
        report.count("filters", "f1")

        best = incumbent.size
        theta = best - 2
        dropped: set[int] = set()
        for u in N:
            cur = [w for w in N if w not in dropped]
            if not intersect_size_gt_bool(cur, H.get_hashed_neighborhood(u), theta, ee):
                dropped.add(u)
        N = [w for w in N if w not in dropped]
        if len(N) < best:
            return
        report.count("filters", "f2")

        best = incumbent.size
        theta = best - 2
        m_hat = 0
        dropped.clear()
        for u in N:
            cur = [w for w in N if w not in dropped]
            d = intersect_size_gt_val(cur, H.get_hashed_neighborhood(u), theta, ee)
            if d <= theta:
                dropped.add(u)
            m_hat += max(d, 0)
        N = [w for w in N if w not in dropped]
        if len(N) < incumbent.size:
            return
        report.count("filters", "f3")
    else:
        N = list(right_neighborhood(H, v))
        m_hat = None

    sub = induced_subgraph(H, N)
    if m_hat is None:
        m_hat = sub.directed_edges
    algo = choose_algorithm(m_hat, len(N), cfg.phi)
    report.count("dispatch", algo)
    to_orig = H.order.to_original
    if algo == KVC:
        max_clique_via_kvc(sub, incumbent.size, incumbent, root=[v],
                           to_original=to_orig, kernels=cfg.kernels)
    else:
        mc_branch_bound(sub, [v], incumbent, to_original=to_orig, coloring=cfg.coloring)


def systematic_search(H: LazyGraph, cfg: SolverConfig, incumbent: Incumbent,
                      report: PhaseReport | None = None, deadline: _Deadline | None = None) -> None:
    report = report if report is not None else PhaseReport()
    deadline = deadline or _Deadline(None)
    rng = random.Random(cfg.seed)
    c = H.c
    top = H.degeneracy + 1

    def visit(v: int) -> None:
        if deadline.expired():
            report.exact = False
            return
        if c[v] >= incumbent.size:
            report.count("filters", "gate")
            neighbor_search(H, v, cfg, incumbent, report)

    seeds = []
    for k in range(incumbent.size, top + 1):
        lvl = H.level(k)
        if len(lvl):
            seeds.append(rng.choice(lvl) if cfg.random_level_seed else lvl.start)
    _run(visit, seeds, cfg.threads)

    for k in range(top, 0, -1):
        if k >= incumbent.size:
            _run(visit, H.level(k), cfg.threads)


def lazy_mc(G: CsrGraph, cfg: SolverConfig | None = None):
    """Exact maximum clique of ``G``.

    Returns ``(omega, clique, report)``; ``clique`` holds dense vertex ids of
    ``G`` in ascending order (``G.labels`` maps them back to input ids).
    ``report.exact`` is False when the timeout cut the search short.
    """
    cfg = cfg or SolverConfig()
    report = PhaseReport()
    deadline = _Deadline(cfg.timeout)
    incumbent = Incumbent(G)
    if G.n == 0:
        return 0, [], report
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 10_000))

    with report.timed("degree_heuristic"):
        if cfg.heuristics:
            degree_heuristic(G, incumbent, cfg.top_k, cfg.threads, cfg.early_exit)
    report.heuristic_sizes["degree"] = incumbent.size
    with report.timed("kcore"):
        core = kcore(G, incumbent.size, cfg.kcore_method)
    report.degeneracy = core.degeneracy
    with report.timed("ordering"):
        order = determine_sort_order(G, core)
    with report.timed("prepopulate"):
        H = LazyGraph(G, order, core, incumbent)
        H.prepopulate(cfg.prepopulate, cfg.threads)
    with report.timed("coreness_heuristic"):
        if cfg.heuristics:
            coreness_heuristic(H, incumbent, cfg.threads, cfg.early_exit)
    report.heuristic_sizes["coreness"] = incumbent.size
    with report.timed("systematic_search"):
        systematic_search(H, cfg, incumbent, report, deadline)
    return incumbent.size, sorted(incumbent.vertices), report


def must_may_stats(G: CsrGraph, omega: int) -> dict:
    """Share of vertices/edges a search must or may touch, given omega.

    must: coreness > omega - 1; may: coreness >= omega - 1. ``attached`` counts
    edges with at least one endpoint in the may set, ``boundary`` those with
    exactly one.
    """
    core = kcore(G, 0).coreness
    must = core > omega - 1
    may = core >= omega - 1
    e = G.edges()
    n, m = max(G.n, 1), max(len(e), 1)

    def frac_edges(mask):
        return float(np.sum(mask[e[:, 0]] & mask[e[:, 1]])) / m if len(e) else 0.0

    inc = may[e[:, 0]].astype(int) + may[e[:, 1]].astype(int) if len(e) else np.zeros(0)
    return {
        "vertices": G.n,
        "edges": len(e),
        "omega": omega,
        "degeneracy": int(core.max()) if G.n else 0,
        "must_vertices": float(must.sum()) / n,
        "must_edges": frac_edges(must),
        "may_vertices": float(may.sum()) / n,
        "may_edges": frac_edges(may),
        "attached_edges": float(np.sum(inc >= 1)) / m if len(e) else 0.0,
        "boundary_edges": float(np.sum(inc == 1)) / m if len(e) else 0.0,
    }
