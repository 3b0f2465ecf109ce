"""Which part of a graph an exact search has to look at.

Once omega is known, vertices of coreness above omega - 1 must be examined by
any proof of optimality, those at omega - 1 may be, and the rest never are.

    python demos/must_may.py
"""
from __future__ import annotations

import random

from lazymc import CsrGraph, lazy_mc, must_may_stats


def main() -> None:
    rng = random.Random(11)
    n = 600
    edges = {(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.02}
    G = CsrGraph.from_edges(n, sorted(edges))
    omega, _, _ = lazy_mc(G)
    s = must_may_stats(G, omega)
    print(f"sparse random graph: omega={omega}, degeneracy={s['degeneracy']}")
    print(f"   must {s['must_vertices']:.1%} of vertices, may {s['may_vertices']:.1%}")

    # planting a clique one larger than the degeneracy closes the gap and
    # leaves nothing that must be searched
    members = rng.sample(range(n), s["degeneracy"] + 2)
    edges |= {(min(a, b), max(a, b)) for i, a in enumerate(members) for b in members[i + 1:]}
    G = CsrGraph.from_edges(n, sorted(edges))
    omega, _, _ = lazy_mc(G)
    s = must_may_stats(G, omega)
    print(f"with a planted clique: omega={omega}, degeneracy={s['degeneracy']}")
    print(f"   must {s['must_vertices']:.1%} of vertices, may {s['may_vertices']:.1%}")


if __name__ == "__main__":
    main()
