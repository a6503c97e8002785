"""Integral closures, normality, symbolic powers, and intermediate ideals."""

from __future__ import annotations

import random

import pytest

from idealworks.closure import (closure_extras, closure_with_witnesses,
                                enumerate_intermediate_ideals,
                                integral_closure_edge_power, is_normal_edge,
                                newton_closure_power, newton_membership,
                                symbolic_power)
from idealworks.errors import InputError
from idealworks.graphs import Graph, cycle_graph
from idealworks.monomials import MonomialIdeal, edge_ideal


def random_graph(rng, n, p=0.4):
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)
             if rng.random() < p]
    return Graph.from_edges(n, edges)


def test_two_triangles_closure_gains_one_generator():
    g = cycle_graph(3).disjoint_union(cycle_graph(3))
    base = edge_ideal(g).power(3)
    closed = integral_closure_edge_power(g, 3)
    extra = (1, 1, 1, 1, 1, 1)
    assert closure_extras(g, 3) == [extra]
    assert closed == MonomialIdeal.from_gens(6, list(base.gens) + [extra])
    assert not base.contains(extra)
    assert newton_membership(base, extra)


def test_triangle_pentagon_closure_at_s4():
    g = cycle_graph(3).disjoint_union(cycle_graph(5))
    assert closure_extras(g, 4) == [(1,) * 8]
    for s in (1, 2, 3):
        assert closure_extras(g, s) == []


def test_witness_decompositions_are_sound():
    g = cycle_graph(3).disjoint_union(cycle_graph(3))
    closed, witnesses = closure_with_witnesses(g, 3)
    assert len(witnesses) == 1
    w = witnesses[0]
    assert w.vec == (1, 1, 1, 1, 1, 1)
    assert len(w.cycles) % 2 == 0
    used = set()
    for cyc in w.cycles:
        assert len(cyc) % 2 == 1
        assert not used & set(cyc)
        used.update(cyc)
        for i, u in enumerate(cyc):
            assert g.has_edge(u, cyc[(i + 1) % len(cyc)])
    total = sum(len(c) for c in w.cycles)
    assert len(w.edges) == 3 - total // 2
    rebuilt = [0] * g.n
    for cyc in w.cycles:
        for u in cyc:
            rebuilt[u - 1] += 1
    for u, v in w.edges:
        assert g.has_edge(u, v)
        rebuilt[u - 1] += 1
        rebuilt[v - 1] += 1
    assert tuple(rebuilt) == w.vec


def test_cycle_route_matches_lp_route_spot():
    rng = random.Random(61)
    for _ in range(25):
        g = random_graph(rng, rng.randrange(2, 7))
        for s in (1, 2, 3):
            assert integral_closure_edge_power(g, s) == newton_closure_power(g, s)


def test_newton_membership_examples():
    tri = edge_ideal(cycle_graph(3))
    assert newton_membership(tri, (1, 1, 1))
    assert not newton_membership(tri.power(2), (1, 1, 1))
    assert newton_membership(tri.power(2), (2, 1, 1))
    for g in tri.gens:
        assert newton_membership(tri, g)
    with pytest.raises(InputError):
        newton_membership(MonomialIdeal.zero(2), (1, 0))
    with pytest.raises(InputError):
        newton_membership(tri, (1, 1))


def test_normality_and_witness_pair():
    assert is_normal_edge(cycle_graph(5)) == (True, None)
    normal, pair = is_normal_edge(cycle_graph(3).disjoint_union(cycle_graph(3)))
    assert not normal
    assert pair == ((1, 2, 3), (4, 5, 6))
    # joining the two triangles by an edge restores normality
    g = Graph.from_edges(6, list(cycle_graph(3).disjoint_union(cycle_graph(3)).edges)
                         + [(3, 4)])
    assert is_normal_edge(g)[0]


def test_normality_matches_closure_equality():
    rng = random.Random(67)
    for _ in range(20):
        g = random_graph(rng, rng.randrange(2, 7))
        normal = is_normal_edge(g)[0]
        equal_all = all(integral_closure_edge_power(g, s) == edge_ideal(g).power(s)
                        for s in range(1, 5))
        assert normal == equal_all


def test_bipartite_graphs_are_normal():
    rng = random.Random(71)
    for _ in range(15):
        left = rng.randrange(1, 4)
        right = rng.randrange(1, 4)
        edges = [(u, left + v) for u in range(1, left + 1)
                 for v in range(1, right + 1) if rng.random() < 0.6]
        if not edges:
            continue
        g = Graph.from_edges(left + right, edges)
        assert is_normal_edge(g) == (True, None)
        assert closure_extras(g, 3) == []


def test_symbolic_power_triangle():
    g = cycle_graph(3)
    ideal = edge_ideal(g)
    assert symbolic_power(g, 1) == ideal
    expected = MonomialIdeal.from_gens(3, list(ideal.power(2).gens) + [(1, 1, 1)])
    assert symbolic_power(g, 2) == expected


def test_symbolic_power_membership_oracle():
    rng = random.Random(73)
    for _ in range(15):
        g = random_graph(rng, rng.randrange(2, 6))
        covers = g.minimal_vertex_covers()
        for s in (1, 2, 3):
            sym = symbolic_power(g, s)
            if not covers:
                assert sym.is_zero
                continue
            for gen in sym.gens:
                assert all(sum(gen[v - 1] for v in cover) >= s
                           for cover in covers)
            # random probes agree with the cover-degree description
            for _ in range(20):
                probe = tuple(rng.randrange(0, s + 2) for _ in range(g.n))
                member = all(sum(probe[v - 1] for v in cover) >= s
                             for cover in covers)
                assert sym.contains(probe) == member


def test_bipartite_symbolic_equals_ordinary():
    g = cycle_graph(4)
    for s in (1, 2, 3):
        assert symbolic_power(g, s) == edge_ideal(g).power(s)


def test_containment_chain_spot():
    rng = random.Random(79)
    for _ in range(10):
        g = random_graph(rng, rng.randrange(2, 7))
        for s in (1, 2, 3):
            power = edge_ideal(g).power(s)
            closed = integral_closure_edge_power(g, s)
            sym = symbolic_power(g, s)
            for gen in power.gens:
                assert closed.contains(gen)
            for gen in closed.gens:
                assert sym.contains(gen)
            for j in range(1, g.n + 1):
                assert closed.rho(j) <= s


def test_enumerate_intermediate_ideals():
    g = cycle_graph(3).disjoint_union(cycle_graph(3))
    listing = enumerate_intermediate_ideals(g, 3)
    assert len(listing) == 2  # one extra generator, two subsets
    assert listing[0][0] == ()
    assert listing[0][1] == edge_ideal(g).power(3)
    assert listing[-1][1] == integral_closure_edge_power(g, 3)
    again = enumerate_intermediate_ideals(g, 3)
    assert [idx for idx, _ in again] == [idx for idx, _ in listing]
    with pytest.raises(InputError):
        enumerate_intermediate_ideals(g, 3, cap=1)


def test_intermediate_sampling_under_cap():
    # a graph with several extras at s = 3: three disjoint triangles
    g = cycle_graph(3).disjoint_union(cycle_graph(3)).disjoint_union(cycle_graph(3))
    extras = closure_extras(g, 3)
    assert len(extras) == 3  # one per pair of triangles
    full = enumerate_intermediate_ideals(g, 3, cap=8)
    assert len(full) == 8
    capped = enumerate_intermediate_ideals(g, 3, cap=4, seed=1)
    assert len(capped) == 4
    assert capped[0][0] == ()
    assert capped[-1][0] == (0, 1, 2)
    assert enumerate_intermediate_ideals(g, 3, cap=4, seed=1) == capped
    base = edge_ideal(g).power(3)
    for idx, ideal in capped:
        for k, extra in enumerate(extras):
            assert ideal.contains(extra) == (k in idx or base.contains(extra))
