"""Lazily built, coreness-filtered, relabelled neighbor sets."""
from __future__ import annotations

import threading
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .graph import CsrGraph
from .incumbent import Incumbent
from .ordering import CorenessInfo, VertexOrder
from .setops import HopscotchSet, SortedArraySet

HASHED = 1
SORTED = 2
HASH_DEGREE_THRESHOLD = 16


class LazyGraph:
    """Relabelled view of ``base`` whose neighbor sets are built on demand.

    A set keeps only neighbors whose coreness is at least the incumbent size
    sampled when the set was built. Published sets are never modified, so
    readers skip the lock once the flag bit is visible.
    """

    def __init__(self, base: CsrGraph, order: VertexOrder, coreness: CorenessInfo,
                 incumbent: Incumbent):
        self.base = base
        self.order = order
        self.incumbent = incumbent
        self.n = base.n
        self.coreness_rel = coreness.coreness[order.to_original]
        self.c = self.coreness_rel.tolist()
        self.degeneracy = coreness.degeneracy
        self.flags = [0] * self.n
        self.hash_sets: list[HopscotchSet | None] = [None] * self.n
        self.sorted_sets: list[SortedArraySet | None] = [None] * self.n
        self.locks = [threading.Lock() for _ in range(self.n)]
        self.built = [0, 0]  # hash, sorted
        self._stats_lock = threading.Lock()

    def _filtered(self, v: int) -> np.ndarray:
        nb = self.order.to_relabelled[self.base.neighbors_of(int(self.order.to_original[v]))]
        floor = self.incumbent.size
        return nb[self.coreness_rel[nb] >= floor]

    def degree(self, v: int) -> int:
        return self.base.degree(int(self.order.to_original[v]))

    def get_hashed_neighborhood(self, v: int) -> HopscotchSet:
        if self.flags[v] & HASHED:
            return self.hash_sets[v]
        with self.locks[v]:
            if not self.flags[v] & HASHED:
                self.hash_sets[v] = HopscotchSet(self._filtered(v).tolist())
                self.flags[v] |= HASHED
                with self._stats_lock:
                    self.built[0] += 1
        return self.hash_sets[v]

    def get_sorted_neighborhood(self, v: int) -> SortedArraySet:
        if self.flags[v] & SORTED:
            return self.sorted_sets[v]
        with self.locks[v]:
            if not self.flags[v] & SORTED:
                self.sorted_sets[v] = SortedArraySet(np.sort(self._filtered(v)).tolist())
                self.flags[v] |= SORTED
                with self._stats_lock:
                    self.built[1] += 1
        return self.sorted_sets[v]

    def get_any_neighborhood(self, v: int) -> HopscotchSet | SortedArraySet:
        f = self.flags[v]
        if f & HASHED:
            return self.hash_sets[v]
        if f & SORTED:
            return self.sorted_sets[v]
        if self.degree(v) > HASH_DEGREE_THRESHOLD:
            return self.get_hashed_neighborhood(v)
        return self.get_sorted_neighborhood(v)

    def prepopulate(self, policy: str = "must", threads: int = 1) -> int:
        """Eagerly build hash sets; returns how many vertices were targeted."""
        if policy == "none":
            return 0
        if policy == "all":
            targets = range(self.n)
        elif policy == "must":
            targets = np.flatnonzero(self.coreness_rel >= self.incumbent.size).tolist()
        else:
            raise ValueError(f"unknown prepopulate policy {policy!r}")
        if threads > 1:
            with ThreadPoolExecutor(threads) as pool:
                list(pool.map(self.get_hashed_neighborhood, targets, chunksize=256))
        else:
            for v in targets:
                self.get_hashed_neighborhood(v)
        return len(targets)

    def published(self) -> int:
        return sum(1 for f in self.flags if f)

    def to_original(self, vertices) -> list[int]:
        to_orig = self.order.to_original
        return [int(to_orig[v]) for v in vertices]

    def level_start(self, k: int) -> int:
        """First relabelled id with coreness >= k (coreness is sorted)."""
        return int(np.searchsorted(self.coreness_rel, k, side="left"))

    def level(self, k: int) -> range:
        return range(self.level_start(k), self.level_start(k + 1))
