"""Exact engines for a single cut-out neighborhood.

Both work on bitmasks over member indices of an :class:`InducedSubgraph`.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

from .graph import ComplementAdjacency, InducedSubgraph, complement_adjacency
from .incumbent import Incumbent


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _color_count(P: int, masks: Sequence[int]) -> int:
    classes: list[int] = []
    for v in _bits(P):
        adj = masks[v]
        for i, cls in enumerate(classes):
            if not cls & adj:
                classes[i] = cls | (1 << v)
                break
        else:
            classes.append(1 << v)
    return len(classes)


def greedy_color_bound(H: InducedSubgraph) -> int:
    """Colors used by sequential greedy coloring in member order."""
    return _color_count((1 << H.size) - 1, H.masks)


def mc_branch_bound(H: InducedSubgraph, base: Sequence[int], incumbent: Incumbent,
                    to_original=None, coloring: bool = True) -> None:
    """Search ``H`` for a clique that, joined with ``base``, beats the incumbent.

    Bron-Kerbosch with Tomita pivoting; a branch is cut when ``|C| + |P|`` or
    ``|C| + colors(P)`` cannot exceed the incumbent.
    """
    masks = H.masks
    members = H.members
    base = list(base)
    nb = len(base)

    def submit(R: int):
        clique = base + [members[i] for i in _bits(R)]
        if to_original is not None:
            clique = [int(to_original[v]) for v in clique]
        incumbent.try_improve(clique)

    def expand(R: int, size: int, P: int, X: int):
        if not P:
            if size > incumbent.size:
                submit(R)
            return
        if size + P.bit_count() <= incumbent.size:
            return
        if coloring and size + _color_count(P, masks) <= incumbent.size:
            return
        pivot = max(_bits(P | X), key=lambda u: (masks[u] & P).bit_count())
        for v in _bits(P & ~masks[pivot]):
            bit = 1 << v
            expand(R | bit, size + 1, P & masks[v], X & masks[v])
            P &= ~bit
            X |= bit
            if size + P.bit_count() <= incumbent.size:
                return

    expand(0, nb, (1 << H.size) - 1, 0)


# k-vertex cover on the complement ------------------------------------------

@dataclass(frozen=True)
class KvcInstance:
    """Vertex cover state: ``alive`` marks undecided vertices, ``cover``
    the ones already taken, ``k`` the remaining budget."""

    rows: tuple[int, ...]
    alive: int
    k: int
    cover: int = 0

    @classmethod
    def from_complement(cls, comp: ComplementAdjacency, k: int) -> "KvcInstance":
        return cls(comp.rows, (1 << comp.size) - 1, k)

    def degree(self, v: int) -> int:
        return (self.rows[v] & self.alive).bit_count()

    def num_edges(self) -> int:
        return sum(self.degree(v) for v in _bits(self.alive)) // 2

    def take(self, vs: int) -> "KvcInstance":
        return replace(self, alive=self.alive & ~vs, cover=self.cover | vs,
                       k=self.k - vs.bit_count())

    def drop(self, vs: int) -> "KvcInstance":
        return replace(self, alive=self.alive & ~vs)


def buss_kernel(inst: KvcInstance) -> KvcInstance | None:
    """Force every vertex of degree > k into the cover; None if infeasible."""
    changed = True
    while changed and inst.k >= 0:
        changed = False
        for v in _bits(inst.alive):
            if inst.degree(v) > inst.k:
                inst = inst.take(1 << v)
                changed = True
                if inst.k < 0:
                    return None
    if inst.k < 0 or inst.num_edges() > inst.k * inst.k:
        return None
    return inst


def low_degree_kernel(inst: KvcInstance) -> KvcInstance | None:
    """Degree 0/1 rules and the triangle case of degree 2, to a fixpoint.

    Degree-2 vertices whose neighbors are not adjacent would need folding and
    are left alone.
    """
    changed = True
    while changed:
        changed = False
        for v in _bits(inst.alive):
            if not inst.alive >> v & 1:
                continue
            nbrs = inst.rows[v] & inst.alive
            d = nbrs.bit_count()
            if d == 0:
                inst = inst.drop(1 << v)
                changed = True
            elif d == 1:
                inst = inst.take(nbrs).drop(1 << v)
                changed = True
            elif d == 2:
                a, b = _bits(nbrs)
                if inst.rows[a] >> b & 1:
                    inst = inst.take(nbrs).drop(1 << v)
                    changed = True
            if inst.k < 0:
                return None
    return inst


def path_cycle_cover(inst: KvcInstance) -> KvcInstance | None:
    """Exact cover when every remaining vertex has degree <= 2."""
    alive = inst.alive
    rows = inst.rows
    cover = 0
    seen = 0
    for s in _bits(alive):
        if seen >> s & 1:
            continue
        # walk the component containing s
        comp = [s]
        seen |= 1 << s
        stack = [s]
        while stack:
            x = stack.pop()
            for y in _bits(rows[x] & alive & ~seen):
                seen |= 1 << y
                comp.append(y)
                stack.append(y)
        if len(comp) == 1:
            continue
        degs = {x: (rows[x] & alive).bit_count() for x in comp}
        assert max(degs.values()) <= 2
        ends = [x for x in comp if degs[x] == 1]
        start = ends[0] if ends else comp[0]
        # order the component along the path or cycle
        walk = [start]
        prev, cur = -1, start
        while True:
            nxt = [y for y in _bits(rows[cur] & alive) if y != prev and y != start]
            if not nxt or len(walk) == len(comp):
                break
            prev, cur = cur, nxt[0]
            walk.append(cur)
        # every second vertex; a path of e edges needs ceil(e/2), an n-cycle ceil(n/2)
        for i in range(1, len(walk), 2):
            cover |= 1 << walk[i]
        if not ends and len(walk) % 2:
            cover |= 1 << walk[-1]
    out = inst.take(cover).drop(alive & ~cover)
    return out if out.k >= 0 else None


def find_vertex_cover(comp: ComplementAdjacency | KvcInstance, k: int | None = None,
                      kernels: bool = True) -> int | None:
    """Bitmask of a vertex cover with at most ``k`` vertices, or None."""
    inst = comp if isinstance(comp, KvcInstance) else KvcInstance.from_complement(comp, k)
    return _kvc(inst, kernels)


def _kvc(inst: KvcInstance, kernels: bool) -> int | None:
    if inst.k < 0:
        return None
    if kernels:
        inst = buss_kernel(inst)
        if inst is None:
            return None
        inst = low_degree_kernel(inst)
        if inst is None:
            return None
    best_v, best_d = -1, -1
    for v in _bits(inst.alive):
        d = inst.degree(v)
        if d > best_d:
            best_v, best_d = v, d
    if best_d <= 0:
        return inst.cover
    if best_d <= 2:
        done = path_cycle_cover(inst)
        return None if done is None else done.cover
    if inst.k == 0:
        return None
    found = _kvc(inst.take(1 << best_v), kernels)
    if found is not None:
        return found
    nbrs = inst.rows[best_v] & inst.alive
    return _kvc(inst.take(nbrs).drop(1 << best_v), kernels)


def kvc_decision(comp: ComplementAdjacency, k: int, kernels: bool = True) -> bool:
    return find_vertex_cover(comp, k, kernels) is not None


def min_vertex_cover_size(comp: ComplementAdjacency, kernels: bool = True) -> int:
    """Smallest feasible k, by binary search over :func:`kvc_decision`."""
    lo, hi = 0, comp.size
    while lo < hi:
        mid = (lo + hi) // 2
        if kvc_decision(comp, mid, kernels):
            hi = mid
        else:
            lo = mid + 1
    return lo


def _degeneracy(masks: Sequence[int]) -> int:
    alive = (1 << len(masks)) - 1
    best = 0
    while alive:
        v = min(_bits(alive), key=lambda u: (masks[u] & alive).bit_count())
        best = max(best, (masks[v] & alive).bit_count())
        alive &= ~(1 << v)
    return best


def max_clique_via_kvc(H: InducedSubgraph, lower: int, incumbent: Incumbent,
                       root: Sequence[int] = (), to_original=None,
                       kernels: bool = True) -> int | None:
    """Largest clique of ``H`` of size >= ``lower`` found by binary search on
    the cover budget of the complement. Returns its size (root excluded) or
    None if no such clique exists."""
    n = H.size
    if n == 0:
        return None
    hi = min(n, _degeneracy(H.masks) + 1)
    comp = complement_adjacency(H)
    lo, cover = lower - 1, None
    while lo < hi:
        mid = (lo + hi + 1) // 2
        found = find_vertex_cover(comp, n - mid, kernels)
        if found is not None:
            lo, cover = mid, found
            # the complement of the cover may be larger than asked for
            lo = max(lo, n - found.bit_count())
        else:
            hi = mid - 1
    if cover is None:
        return None
    keep = ((1 << n) - 1) & ~cover
    clique = [H.members[i] for i in _bits(keep)]
    assert all((H.masks[i] | (1 << i)) & keep == keep for i in _bits(keep))
    full = list(root) + clique
    if to_original is not None:
        full = [int(to_original[v]) for v in full]
    incumbent.try_improve(full)
    return len(clique)
