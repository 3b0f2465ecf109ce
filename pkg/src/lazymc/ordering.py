"""Coreness, degeneracy and the coreness-then-degree vertex order."""
from __future__ import annotations

import bisect
from dataclasses import dataclass

import numpy as np

from .graph import CsrGraph


@dataclass(frozen=True, eq=False)
class CorenessInfo:
    """Per-vertex coreness.

    Vertices whose degree is below ``floor`` were not peeled; their entry is
    their degree, which upper-bounds the true coreness.
    """

    coreness: np.ndarray
    floor: int = 0

    @property
    def degeneracy(self) -> int:
        return int(self.coreness.max()) if len(self.coreness) else 0


@dataclass(frozen=True, eq=False)
class VertexOrder:
    to_relabelled: np.ndarray
    to_original: np.ndarray


def _gather(G: CsrGraph, vs: np.ndarray) -> np.ndarray:
    """Concatenated neighbor lists of ``vs``."""
    starts = G.offsets[vs]
    lens = G.offsets[vs + 1] - starts
    total = int(lens.sum())
    if total == 0:
        return np.zeros(0, dtype=np.int64)
    base = np.repeat(starts - np.cumsum(lens) + lens, lens)
    return G.neighbors[base + np.arange(total)].astype(np.int64)


def kcore_sequential(G: CsrGraph, floor: int = 0) -> CorenessInfo:
    """Matula-Beck bucket peeling on the vertices with degree >= floor."""
    n = G.n
    deg = G.degrees().astype(np.int64)
    core = deg.copy()
    active = deg >= floor
    # degrees inside the active subgraph
    d = np.zeros(n, dtype=np.int64)
    if n:
        src = np.repeat(np.arange(n), G.degrees())
        both = active[src] & active[G.neighbors]
        d = np.bincount(src[both], minlength=n)
    d = d.tolist()
    act = active.tolist()
    verts = [v for v in range(n) if act[v]]
    if not verts:
        return CorenessInfo(core, floor)
    maxd = max(d[v] for v in verts)
    # bin sort as in Batagelj-Zaversnik
    bins = [0] * (maxd + 1)
    for v in verts:
        bins[d[v]] += 1
    start = 0
    for k in range(maxd + 1):
        bins[k], start = start, start + bins[k]
    pos = [0] * n
    vert = [0] * len(verts)
    for v in verts:
        pos[v] = bins[d[v]]
        vert[pos[v]] = v
        bins[d[v]] += 1
    for k in range(maxd, 0, -1):
        bins[k] = bins[k - 1]
    bins[0] = 0
    offsets = G.offsets.tolist()
    nbrs = G.neighbors
    for i in range(len(verts)):
        v = vert[i]
        for u in nbrs[offsets[v]:offsets[v + 1]].tolist():
            if act[u] and d[u] > d[v]:
                du = d[u]
                pu = pos[u]
                pw = bins[du]
                w = vert[pw]
                if u != w:
                    pos[u], pos[w] = pw, pu
                    vert[pu], vert[pw] = w, u
                bins[du] += 1
                d[u] -= 1
    core[active] = np.asarray(d, dtype=np.int64)[active]
    return CorenessInfo(core, floor)


def kcore_rounds(G: CsrGraph, floor: int = 0) -> CorenessInfo:
    """Peel-by-rounds coreness; each round removes a whole frontier at once.

    This is the variant whose rounds could run in parallel; with numpy every
    round is one vectorized step.
    """
    n = G.n
    deg = G.degrees().astype(np.int64)
    core = deg.copy()
    alive = deg >= floor
    if not alive.any():
        return CorenessInfo(core, floor)
    d = np.zeros(n, dtype=np.int64)
    src = np.repeat(np.arange(n), G.degrees())
    both = alive[src] & alive[G.neighbors]
    d = np.bincount(src[both], minlength=n)
    remaining = int(alive.sum())
    k = 0
    frontier = np.zeros(0, dtype=np.int64)
    while remaining:
        if not len(frontier):
            k = max(k, int(d[alive].min()))
            frontier = np.flatnonzero(alive & (d <= k))
        core[frontier] = k
        alive[frontier] = False
        remaining -= len(frontier)
        nb = _gather(G, frontier)
        nb = nb[alive[nb]]
        np.subtract.at(d, nb, 1)
        cand = np.unique(nb)
        frontier = cand[d[cand] <= k]
    return CorenessInfo(core, floor)


def kcore(G: CsrGraph, floor: int = 0, method: str = "rounds") -> CorenessInfo:
    if method == "sequential":
        return kcore_sequential(G, floor)
    if method == "rounds":
        return kcore_rounds(G, floor)
    raise ValueError(f"unknown kcore method {method!r}")


def determine_sort_order(G: CsrGraph, c: CorenessInfo) -> VertexOrder:
    """Order by increasing coreness, then degree, then original id.

    Two stable passes: degree first, then coreness.
    """
    by_degree = np.argsort(G.degrees(), kind="stable")
    order = by_degree[np.argsort(c.coreness[by_degree], kind="stable")]
    to_rel = np.empty(G.n, dtype=np.int64)
    to_rel[order] = np.arange(G.n)
    return VertexOrder(to_rel, order.astype(np.int64))


def right_neighborhood(H, v: int) -> list[int]:
    """Relabelled neighbors of ``v`` with a larger id, ascending."""
    elems = H.get_sorted_neighborhood(v).elems
    return elems[bisect.bisect_right(elems, v):]
