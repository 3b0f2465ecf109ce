import itertools
import random

import pytest

from lazymc.graph import ComplementAdjacency, CsrGraph, complement_adjacency, induced_subgraph
from lazymc.incumbent import Incumbent
from lazymc.subsolvers import (KvcInstance, buss_kernel, find_vertex_cover, greedy_color_bound,
                               kvc_decision, low_degree_kernel, max_clique_via_kvc,
                               mc_branch_bound, min_vertex_cover_size, path_cycle_cover)
from oracles import max_clique_size, min_vertex_cover_size as brute_mvc, random_graph


def sub(n, edges):
    return induced_subgraph(CsrGraph.from_edges(n, edges), range(n))


def complete_edges(n):
    return [(a, b) for a in range(n) for b in range(a + 1, n)]


def comp_of(n, edges):
    """ComplementAdjacency whose rows are exactly ``edges``."""
    rows = [0] * n
    for u, v in edges:
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return ComplementAdjacency(tuple(range(n)), tuple(rows))


def inst(n, edges, k):
    return KvcInstance.from_complement(comp_of(n, edges), k)


def test_color_bound_examples():
    assert greedy_color_bound(sub(4, complete_edges(4))) == 4
    assert greedy_color_bound(sub(5, [])) == 1


@pytest.mark.parametrize("seed", range(30))
def test_color_bound_dominates_omega(seed):
    rng = random.Random(seed)
    edges = random_graph(18, 0.5, rng)
    assert greedy_color_bound(sub(18, edges)) >= max_clique_size(18, edges)


def test_branch_bound_examples():
    inc = Incumbent()
    H = induced_subgraph(CsrGraph.from_edges(7, complete_edges(6)), range(6))
    mc_branch_bound(H, [99], inc)
    assert inc.size == 7 and 99 in inc.vertices
    inc = Incumbent()
    mc_branch_bound(sub(4, []), [99], inc)
    assert inc.size == 2


@pytest.mark.parametrize("coloring", [True, False])
def test_branch_bound_matches_brute_force(coloring):
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(0, 25)
        edges = random_graph(n, rng.choice([0.1, 0.3, 0.5, 0.7, 0.9]), rng)
        G = CsrGraph.from_edges(n, edges)
        inc = Incumbent(G)
        mc_branch_bound(induced_subgraph(G, range(n)), [], inc, coloring=coloring)
        assert inc.size == max_clique_size(n, edges)


def test_branch_bound_respects_incumbent():
    inc = Incumbent()
    inc.try_improve(range(10))
    mc_branch_bound(sub(6, complete_edges(6)), [], inc)
    assert inc.size == 10


def test_buss_examples():
    star = [(0, i) for i in range(1, 6)]
    out = buss_kernel(inst(6, star, 1))
    assert out is not None and out.k == 0 and out.cover == 1 and out.num_edges() == 0
    assert brute_mvc(5, complete_edges(5)) == 4
    assert buss_kernel(inst(5, complete_edges(5), 1)) is None
    out = buss_kernel(inst(4, [], 0))
    assert out is not None and out.alive == 0b1111 and out.k == 0


def test_low_degree_examples():
    out = low_degree_kernel(inst(2, [(0, 1)], 1))
    assert out is not None and out.cover.bit_count() == 1 and out.num_edges() == 0
    tri = [(0, 1), (1, 2), (0, 2)]
    assert brute_mvc(3, tri) == 2
    out = low_degree_kernel(inst(3, tri, 2))
    assert out is not None and out.cover.bit_count() == 2 and out.num_edges() == 0
    assert low_degree_kernel(inst(3, tri, 1)) is None
    out = low_degree_kernel(inst(4, [], 0))
    assert out is not None and out.cover == 0 and out.alive == 0


def test_low_degree_leaves_open_degree_two_alone():
    # path a-b-c: b has degree 2 with non-adjacent neighbors, but a and c are
    # degree 1, so the leaf rule resolves it without folding
    out = low_degree_kernel(inst(3, [(0, 1), (1, 2)], 1))
    assert out is not None and out.cover == 0b010
    # a 4-cycle has only open degree-2 vertices: nothing may change
    c4 = [(0, 1), (1, 2), (2, 3), (3, 0)]
    out = low_degree_kernel(inst(4, c4, 2))
    assert out.alive == 0b1111 and out.cover == 0


def test_path_cycle_examples():
    assert path_cycle_cover(inst(3, [(0, 1), (1, 2)], 1)).cover == 0b010
    c5 = [(i, (i + 1) % 5) for i in range(5)]
    assert brute_mvc(5, c5) == 3
    assert path_cycle_cover(inst(5, c5, 2)) is None
    assert path_cycle_cover(inst(5, c5, 3)) is not None
    assert path_cycle_cover(inst(3, [], 0)) is not None


@pytest.mark.parametrize("seed", range(40))
def test_path_cycle_exact_on_unions(seed):
    rng = random.Random(seed)
    # random disjoint paths and cycles
    edges, n = [], 0
    for _ in range(rng.randint(1, 4)):
        size = rng.randint(1, 6)
        vs = list(range(n, n + size))
        edges += list(zip(vs, vs[1:]))
        if size >= 3 and rng.random() < 0.5:
            edges.append((vs[-1], vs[0]))
        n += size
    perm = list(range(n))
    rng.shuffle(perm)
    edges = [(perm[a], perm[b]) for a, b in edges]
    best = brute_mvc(n, edges)
    assert path_cycle_cover(inst(n, edges, best)) is not None
    if best:
        assert path_cycle_cover(inst(n, edges, best - 1)) is None


def test_kvc_examples():
    comp = comp_of(4, complete_edges(4))
    assert kvc_decision(comp, 2) is False and kvc_decision(comp, 3) is True
    assert kvc_decision(comp_of(5, []), 0) is True


def _covers(n, edges, cover):
    return all(cover >> u & 1 or cover >> v & 1 for u, v in edges)


@pytest.mark.parametrize("kernels", [True, False])
def test_kvc_matches_brute_force(kernels):
    rng = random.Random(3)
    for _ in range(400):
        n = rng.randint(0, 18)
        edges = random_graph(n, rng.random(), rng)
        best = brute_mvc(n, edges)
        comp = comp_of(n, edges)
        for k in range(n + 1):
            cover = find_vertex_cover(comp, k, kernels)
            assert (cover is not None) == (k >= best)
            if cover is not None:
                assert cover.bit_count() <= k and _covers(n, edges, cover)


def test_duality_small():
    rng = random.Random(8)
    for _ in range(100):
        n = rng.randint(1, 20)
        edges = random_graph(n, rng.random(), rng)
        H = sub(n, edges)
        assert min_vertex_cover_size(complement_adjacency(H)) + max_clique_size(n, edges) == n


def test_via_kvc_examples():
    inc = Incumbent()
    inc.try_improve(range(100, 103))
    H = induced_subgraph(CsrGraph.from_edges(6, complete_edges(5)), range(5))
    assert max_clique_via_kvc(H, 3, inc, root=[99]) == 5
    assert inc.size == 6 and 99 in inc.vertices
    inc = Incumbent()
    inc.try_improve(range(100, 103))
    assert max_clique_via_kvc(sub(4, []), 3, inc, root=[99]) is None
    assert inc.size == 3


def test_via_kvc_matches_brute_force_on_dense():
    rng = random.Random(12)
    done = 0
    while done < 200:
        n = rng.randint(2, 18)
        edges = random_graph(n, rng.uniform(0.5, 1.0), rng)
        H = sub(n, edges)
        if H.density < 0.5:
            continue
        done += 1
        omega = max_clique_size(n, edges)
        lower = rng.randint(0, n)
        inc = Incumbent()
        inc.try_improve(range(1000, 1000 + lower))
        got = max_clique_via_kvc(H, lower, inc, root=[999])
        if omega + 1 > lower:
            assert got == omega and inc.size == omega + 1
            members = [v for v in inc.vertices if v != 999]
            assert all(b in H.adjacency[H.members.index(a)] for a, b in itertools.combinations(members, 2))
        else:
            assert inc.size == lower
