"""Solve a handful of random graphs and read the phase report.

    python demos/solve_random_graphs.py
"""
from __future__ import annotations

import random

from lazymc import CsrGraph, SolverConfig, lazy_mc


def gnp(n: int, p: float, rng: random.Random) -> CsrGraph:
    return CsrGraph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                                   if rng.random() < p])


def main() -> None:
    rng = random.Random(3)
    for n, p in [(200, 0.05), (150, 0.3), (80, 0.7), (60, 0.9)]:
        G = gnp(n, p, rng)
        omega, clique, report = lazy_mc(G, SolverConfig(phi=0.5))
        f, d = report.filters, report.dispatch
        print(f"G({n}, {p}): omega={omega} degeneracy={report.degeneracy} "
              f"heuristics={report.heuristic_sizes}")
        print(f"   neighborhoods: gate {f['gate']} -> f1 {f['f1']} -> f2 {f['f2']} -> f3 {f['f3']}; "
              f"solved by MC {d['mc']}, by vertex cover {d['kvc']}")
    # denser graphs send more surviving neighborhoods to the vertex cover
    # engine, because their candidate sets are nearly complete


if __name__ == "__main__":
    main()
