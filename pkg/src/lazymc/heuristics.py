"""Greedy searches that seed the incumbent before the exact search."""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable

import numpy as np

from .graph import CsrGraph
from .incumbent import Incumbent
from .lazygraph import LazyGraph
from .ordering import right_neighborhood
from .setops import intersect_gt, intersect_size_gt_val

DEFAULT_TOP_K = 64


def _run(fn: Callable, items: Iterable, threads: int) -> None:
    items = list(items)
    if threads > 1 and len(items) > 1:
        with ThreadPoolExecutor(threads) as pool:
            for _ in pool.map(fn, items):
                pass
    else:
        for it in items:
            fn(it)


def try_improve_incumbent(incumbent: Incumbent, clique: Iterable[int]) -> bool:
    return incumbent.try_improve(clique)


def top_k_by_degree(G: CsrGraph, k: int) -> list[int]:
    deg = G.degrees()
    order = np.lexsort((np.arange(G.n), -deg))
    return order[:k].tolist()


def degree_walk(G: CsrGraph, v: int, incumbent: Incumbent, early_exit: bool = True) -> list[int]:
    """Grow a clique from ``v``, always adding the candidate with the most
    neighbors among the remaining candidates (lowest id on ties)."""
    deg = G.degrees().tolist()
    N = [u for u in G.neighbors_of(v).tolist() if deg[u] >= incumbent.size]
    C = [v]
    rows: dict[int, set[int]] = {}

    def row(w):
        s = rows.get(w)
        if s is None:
            s = rows[w] = set(G.neighbors_of(w).tolist())
        return s

    while N:
        # the candidate list is the short side; probe each neighbor row as a set
        best, pick = -1, None
        for w in N:
            if deg[w] <= best:
                continue
            d = intersect_size_gt_val(N, row(w), best, early_exit)
            if d > best:
                best, pick = d, w
        C.append(pick)
        buf = [0] * len(N)
        k = intersect_gt(N, row(pick), buf, best - 1, early_exit)
        N = buf[:k] if k > 0 else []
    return C


def degree_heuristic(G: CsrGraph, incumbent: Incumbent, top_k: int = DEFAULT_TOP_K,
                     threads: int = 1, early_exit: bool = True) -> None:
    def seed(v):
        incumbent.try_improve(degree_walk(G, v, incumbent, early_exit))

    _run(seed, top_k_by_degree(G, top_k), threads)


def coreness_walk(H: LazyGraph, v: int, incumbent: Incumbent, early_exit: bool = True) -> list[int]:
    """Grow a clique from relabelled ``v`` by repeatedly taking the highest
    numbered candidate. Stops once the candidates cannot beat the incumbent."""
    N = list(right_neighborhood(H, v))
    C = [v]
    while N:
        u = N[-1]
        C.append(u)
        # a clique of |C| + |N'| must exceed the incumbent
        theta = incumbent.size - len(C)
        buf = [0] * len(N)
        k = intersect_gt(N, H.get_hashed_neighborhood(u), buf, theta, early_exit)
        if k < 0:
            break
        N = buf[:k]
    return C


def coreness_heuristic(H: LazyGraph, incumbent: Incumbent, threads: int = 1,
                       early_exit: bool = True) -> None:
    seeds = []
    for k in range(H.degeneracy + 1, 0, -1):
        lvl = H.level(k)
        if len(lvl):
            seeds.append(lvl.start)

    def seed(v):
        C = coreness_walk(H, v, incumbent, early_exit)
        incumbent.try_improve(H.to_original(C))

    _run(seed, seeds, threads)
