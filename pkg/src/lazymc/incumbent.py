from __future__ import annotations

import threading
from typing import Iterable

from .graph import CsrGraph, first_non_edge


class Incumbent:
    """Largest clique found so far, shared by all workers.

    ``size`` may be read without locking; it only ever grows. When a graph is
    attached, every improving clique is checked for pairwise adjacency
    before it is accepted.
    """

    def __init__(self, graph: CsrGraph | None = None):
        self.graph = graph
        self.size = 0
        self.vertices: tuple[int, ...] = ()
        self.updates = 0
        self._lock = threading.Lock()

    def try_improve(self, clique: Iterable[int]) -> bool:
        clique = tuple(int(v) for v in clique)
        if len(clique) <= self.size:
            return False
        if self.graph is not None:
            bad = first_non_edge(self.graph, clique)
            if bad is not None:
                raise ValueError(f"submitted vertex set is not a clique: {bad} not adjacent")
        with self._lock:
            if len(clique) <= self.size:
                return False
            self.vertices = clique
            self.size = len(clique)
            self.updates += 1
            return True

    def __repr__(self) -> str:
        return f"Incumbent(size={self.size})"
