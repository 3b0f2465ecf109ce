"""Set representations and early-exit intersections.

Intersections take ``A`` as an ascending sequence and ``B`` as anything
supporting ``len`` and ``in`` (normally a :class:`HopscotchSet`).
"""
from __future__ import annotations

import bisect
from typing import Iterable, MutableSequence, Sequence

NEIGHBORHOOD = 16
MAX_LOAD = 0.7
_GOLDEN = 0x9E3779B9
_EMPTY = -1


class HopscotchSet:
    """Open-addressed integer set with 16-slot hopscotch neighborhoods.

    ``_hop[b]`` bit ``i`` is set iff slot ``b + i`` (mod capacity) holds an
    element whose home bucket is ``b``.
    """

    __slots__ = ("_slots", "_hop", "_cap", "_shift", "_size")

    def __init__(self, elems: Iterable[int] = (), capacity: int | None = None):
        elems = list(elems)
        if capacity is None:
            capacity = int(len(elems) / MAX_LOAD) + 1
        self._alloc(capacity)
        for x in elems:
            self.add(x)

    def _alloc(self, capacity: int) -> None:
        cap = NEIGHBORHOOD
        while cap < capacity:
            cap <<= 1
        self._cap = cap
        self._shift = 32 - (cap.bit_length() - 1)
        self._slots = [_EMPTY] * cap
        self._hop = [0] * cap
        self._size = 0

    @property
    def capacity(self) -> int:
        return self._cap

    def _home(self, x: int) -> int:
        return ((x * _GOLDEN) & 0xFFFFFFFF) >> self._shift

    def __len__(self) -> int:
        return self._size

    def __iter__(self):
        return (x for x in self._slots if x != _EMPTY)

    def __contains__(self, x: int) -> bool:
        home = ((x * _GOLDEN) & 0xFFFFFFFF) >> self._shift
        mask = self._hop[home]
        slots = self._slots
        last = self._cap - 1
        while mask:
            low = mask & -mask
            if slots[(home + low.bit_length() - 1) & last] == x:
                return True
            mask ^= low
        return False

    contains = __contains__

    def add(self, x: int) -> None:
        if x in self:
            return
        if (self._size + 1) > MAX_LOAD * self._cap or not self._try_insert(x):
            self._grow(x)

    def _try_insert(self, x: int) -> bool:
        cap, last = self._cap, self._cap - 1
        slots, hop = self._slots, self._hop
        home = self._home(x)
        dist = 0
        while dist < cap and slots[(home + dist) & last] != _EMPTY:
            dist += 1
        if dist == cap:
            return False
        # move the free slot back towards home
        while dist >= NEIGHBORHOOD:
            free = (home + dist) & last
            moved = False
            for back in range(NEIGHBORHOOD - 1, 0, -1):
                b = (free - back) & last
                mask = hop[b]
                while mask:
                    low = mask & -mask
                    i = low.bit_length() - 1
                    if i >= back:
                        break
                    src = (b + i) & last
                    slots[free] = slots[src]
                    slots[src] = _EMPTY
                    hop[b] = (hop[b] & ~low) | (1 << back)
                    dist -= back - i
                    moved = True
                    break
                if moved:
                    break
            if not moved:
                return False
        slots[(home + dist) & last] = x
        hop[home] |= 1 << dist
        self._size += 1
        return True

    def _grow(self, pending: int) -> None:
        old = [x for x in self._slots if x != _EMPTY]
        old.append(pending)
        cap = self._cap * 2
        while True:
            self._alloc(cap)
            if all(self._try_insert(x) for x in old):
                return
            cap *= 2

    def audit(self) -> None:
        """Check the neighborhood and bitmask invariants."""
        last = self._cap - 1
        seen = set()
        owned = 0
        for b, mask in enumerate(self._hop):
            for i in range(NEIGHBORHOOD):
                if mask >> i & 1:
                    x = self._slots[(b + i) & last]
                    assert x != _EMPTY and self._home(x) == b
                    owned += 1
            assert mask < 1 << NEIGHBORHOOD
        for s, x in enumerate(self._slots):
            if x == _EMPTY:
                continue
            assert x not in seen
            seen.add(x)
            off = (s - self._home(x)) & last
            assert off < NEIGHBORHOOD and self._hop[self._home(x)] >> off & 1
        assert owned == len(seen) == self._size


class SortedArraySet:
    __slots__ = ("elems",)

    def __init__(self, elems: Sequence[int] = ()):
        self.elems = list(elems)

    def __len__(self) -> int:
        return len(self.elems)

    def __iter__(self):
        return iter(self.elems)

    def __getitem__(self, i):
        return self.elems[i]

    def __contains__(self, x: int) -> bool:
        i = bisect.bisect_left(self.elems, x)
        return i < len(self.elems) and self.elems[i] == x

    def __repr__(self) -> str:
        return f"SortedArraySet({self.elems!r})"


def build_hash_set(elems: Iterable[int]) -> HopscotchSet:
    return HopscotchSet(elems)


def intersect_gt(A: Sequence[int], B, C: MutableSequence[int], theta: int,
                 early_exit: bool = True) -> int:
    """Write ``A & B`` into ``C`` and return its size if it exceeds ``theta``.

    May return -1 once the size provably cannot exceed ``theta``; ``C`` is
    then left partially written.
    """
    n, m = len(A), len(B)
    if not early_exit:
        k = 0
        for x in A:
            if x in B:
                C[k] = x
                k += 1
        return k if k > theta else -1
    if n < theta or m < theta:
        return -1
    h = n - theta
    base = n - theta
    for a, x in enumerate(A):
        if x not in B:
            h -= 1
            if h <= 0:
                return -1
        else:
            C[a + h - base] = x
    return h + theta


def intersect_size_gt_val(A: Sequence[int], B, theta: int, early_exit: bool = True) -> int:
    """``|A & B|`` when it exceeds ``theta``; otherwise -1 or some value <= theta."""
    n, m = len(A), len(B)
    if not early_exit:
        k = sum(1 for x in A if x in B)
        return k if k > theta else -1
    if n <= theta or m <= theta:
        return -1
    h = n - theta
    for x in A:
        if x not in B:
            h -= 1
            if h <= 0:
                return -1
    return h + theta


def intersect_size_gt_bool(A: Sequence[int], B, theta: int, early_exit: bool = True) -> bool:
    n, m = len(A), len(B)
    if not early_exit:
        return sum(1 for x in A if x in B) > theta
    if n <= theta or m <= theta:
        return False
    h = n - theta
    for a, x in enumerate(A):
        if x not in B:
            h -= 1
            if h <= 0:
                return False
        elif h > n - a - 1:
            return True
    return h > 0
