"""How much work the threshold-aware intersections skip.

Each intersection takes a threshold and may give up as soon as the answer
provably cannot exceed it. This script counts membership probes with and
without that shortcut on random sets.

    python demos/early_exit_intersections.py
"""
from __future__ import annotations

import random

from lazymc.setops import HopscotchSet, intersect_size_gt_bool


class CountingSet:
    """Wraps a set and counts ``in`` probes."""

    def __init__(self, elems):
        self.inner = HopscotchSet(elems)
        self.probes = 0

    def __len__(self):
        return len(self.inner)

    def __contains__(self, x):
        self.probes += 1
        return x in self.inner


def main() -> None:
    rng = random.Random(1)
    universe, size = 2048, 400
    for frac in (0.05, 0.2, 0.5, 0.8):
        theta = int(size * frac)
        saved = total = 0
        for _ in range(200):
            A = sorted(rng.sample(range(universe), size))
            B = CountingSet(rng.sample(range(universe), size))
            intersect_size_gt_bool(A, B, theta, early_exit=True)
            saved += size - B.probes
            total += size
        print(f"theta = {frac:4.0%} of |A|: early exit skipped {saved / total:6.1%} of probes")
    # a random pair of 400-element sets in 2048 shares about 78 elements, so
    # high thresholds are hopeless and get abandoned quickly, while low
    # thresholds are met early and answered "yes" without a full scan


if __name__ == "__main__":
    main()
