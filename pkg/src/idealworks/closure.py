"""Integral closures of edge ideal powers, normality, symbolic powers.

Two genuinely independent routes compute the closure of I(G)^s:

* the combinatorial route expands over tuples of vertex-disjoint odd cycles
  (closures of edge ideal powers are generated by cycle products times edges);
* the Newton-polyhedron route tests lattice points of degree 2s by exact LP
  membership in conv(generators) + R_{>=0}^n.

They share no code beyond the ideal algebra and are compared in tests; never
merge them.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from random import Random
from typing import Sequence

from .errors import InputError
from .graphs import Graph
from .linalg import lp_feasible_convex_cover
from .monomials import ExponentVec, MonomialIdeal, edge_ideal


@dataclass(frozen=True)
class ClosureWitness:
    """A closure generator outside I^s, with one generating decomposition."""

    vec: ExponentVec
    cycles: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int], ...]


def _candidate_tuples(cycles: list[tuple[int, ...]], budget: int) -> list[list[int]]:
    """Index tuples of pairwise vertex-disjoint cycles with total length <= budget."""
    out: list[list[int]] = []
    sets = [frozenset(c) for c in cycles]

    def rec(start: int, chosen: list[int], used: frozenset, left: int) -> None:
        if chosen:
            out.append(list(chosen))
        for i in range(start, len(cycles)):
            if len(cycles[i]) <= left and not (sets[i] & used):
                rec(i + 1, chosen + [i], used | sets[i], left - len(cycles[i]))

    rec(0, [], frozenset(), budget)
    return out


def integral_closure_edge_power(graph: Graph, s: int) -> MonomialIdeal:
    """Integral closure of I(G)^s by the odd-cycle expansion."""
    ideal, extras = closure_with_witnesses(graph, s, witnesses=False)
    del extras
    return ideal


def closure_with_witnesses(graph: Graph, s: int,
                           witnesses: bool = True) -> tuple[MonomialIdeal, list[ClosureWitness]]:
    """Closure of I(G)^s plus decompositions for generators outside I^s."""
    if s < 1:
        raise InputError("closure wants s >= 1")
    ideal = edge_ideal(graph)
    base = ideal.power(s)
    if graph.n == 0 or not graph.edges:
        return base, []
    # a 2a-tuple of odd cycles uses total length >= 6a, so 2a cycles fit only if s >= 3a;
    # each cycle alone is bounded by 2s-3 since the remaining odd cycle has length >= 3
    cycles = graph.enumerate_odd_cycles(max_len=max(2 * s - 3, 0))
    sources: dict[ExponentVec, tuple] = {}
    candidates: list[ExponentVec] = []
    for idxs in _candidate_tuples(cycles, 2 * s):
        if len(idxs) % 2:
            continue
        total = sum(len(cycles[i]) for i in idxs)
        b = s - total // 2
        if b < 0:
            continue
        cyc_vec = [0] * graph.n
        for i in idxs:
            for u in cycles[i]:
                cyc_vec[u - 1] += 1
        if b == 0:
            tails: Sequence[ExponentVec] = [(0,) * graph.n]
        else:
            tails = ideal.power(b).gens
        for tail in tails:
            cand = tuple(a + t for a, t in zip(cyc_vec, tail))
            candidates.append(cand)
            if witnesses and cand not in sources:
                sources[cand] = (tuple(cycles[i] for i in idxs), tail, b)
    closure = MonomialIdeal.from_gens(graph.n, list(base.gens) + candidates)
    found: list[ClosureWitness] = []
    if witnesses:
        base_set = set(base.gens)
        for g in closure.gens:
            if g in base_set or g not in sources:
                continue
            cyc, tail, b = sources[g]
            edges = _edge_decomposition(graph, tail, b)
            if edges is None:
                raise AssertionError("closure tail is not a product of edges")
            w = ClosureWitness(g, cyc, tuple(edges))
            if base.contains(g):
                raise AssertionError("claimed extra generator lies in I^s")
            if not lp_feasible_convex_cover(base.gens, g):
                raise AssertionError("extra generator fails Newton membership")
            found.append(w)
    return closure, found


def _edge_decomposition(graph: Graph, vec: ExponentVec, b: int) -> list[tuple[int, int]] | None:
    if b == 0:
        return [] if not any(vec) else None
    for u, v in graph.edges:
        if vec[u - 1] >= 1 and vec[v - 1] >= 1:
            nxt = list(vec)
            nxt[u - 1] -= 1
            nxt[v - 1] -= 1
            rest = _edge_decomposition(graph, tuple(nxt), b - 1)
            if rest is not None:
                return [(u, v)] + rest
    return None


def newton_membership(ideal: MonomialIdeal, vec: Sequence[int]) -> bool:
    """Is x^vec in the integral closure of the ideal (Newton polyhedron test)?"""
    if ideal.is_zero:
        raise InputError("the zero ideal has an empty Newton polyhedron")
    v = tuple(int(t) for t in vec)
    if len(v) != ideal.n:
        raise InputError("exponent vector has wrong length")
    return lp_feasible_convex_cover(ideal.gens, v)


def _bounded_compositions(total: int, bounds: list[int]) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []

    def rec(pos: int, left: int, acc: tuple[int, ...]) -> None:
        if pos == len(bounds):
            if left == 0:
                out.append(acc)
            return
        if left > sum(bounds[pos:]):
            return
        for v in range(min(left, bounds[pos]) + 1):
            rec(pos + 1, left - v, acc + (v,))

    rec(0, total, ())
    return out


def newton_closure_power(graph: Graph, s: int) -> MonomialIdeal:
    """Closure of I(G)^s via LP membership over all degree-2s candidates.

    Minimal generators of the closure of an edge ideal power sit in degree
    exactly 2s with exponents at most s, so that box of lattice points is the
    whole candidate set.
    """
    if s < 1:
        raise InputError("closure wants s >= 1")
    base = edge_ideal(graph).power(s)
    if not graph.edges:
        return base
    gens = list(base.gens)
    member = set(gens)
    accepted: list[ExponentVec] = []
    for cand in _bounded_compositions(2 * s, [s] * graph.n):
        if cand in member:
            continue
        pts = [g for g in gens if all(gv == 0 or cv > 0 for gv, cv in zip(g, cand))]
        if pts and lp_feasible_convex_cover(pts, cand):
            accepted.append(cand)
    return MonomialIdeal.from_gens(graph.n, gens + accepted)


def is_normal_edge(graph: Graph) -> tuple[bool, tuple[tuple[int, ...], tuple[int, ...]] | None]:
    """Normality of I(G), with a witness pair of odd cycles when it fails.

    I(G) is non-normal exactly when G contains an induced subgraph that is the
    disjoint union of two odd cycles: vertex-disjoint chordless odd cycles with
    no edge between them.
    """
    induced = graph.enumerate_odd_cycles(induced_only=True)
    for i, c1 in enumerate(induced):
        s1 = set(c1)
        for c2 in induced[i + 1:]:
            if s1 & set(c2):
                continue
            if any(graph.has_edge(u, v) for u in c1 for v in c2):
                continue
            return False, (c1, c2)
    return True, None


def symbolic_power(graph: Graph, s: int) -> MonomialIdeal:
    """s-th symbolic power of I(G): intersection of P^s over minimal vertex covers."""
    if s < 1:
        raise InputError("symbolic power wants s >= 1")
    n = graph.n
    result: MonomialIdeal | None = None
    for cover in graph.minimal_vertex_covers():
        gens = []
        for combo in combinations_with_replacement(cover, s):
            v = [0] * n
            for u in combo:
                v[u - 1] += 1
            gens.append(tuple(v))
        prime_power = MonomialIdeal.from_gens(n, gens)
        result = prime_power if result is None else result.intersection(prime_power)
    return result if result is not None else MonomialIdeal.zero(n)


def closure_extras(graph: Graph, s: int) -> list[ExponentVec]:
    """Minimal closure generators lying outside I(G)^s, sorted."""
    base = edge_ideal(graph).power(s)
    closure = integral_closure_edge_power(graph, s)
    inside = set(base.gens)
    return [g for g in closure.gens if g not in inside]


def enumerate_intermediate_ideals(graph: Graph, s: int, cap: int = 64,
                                  seed: int = 0) -> list[tuple[tuple[int, ...], MonomialIdeal]]:
    """Ideals between I^s and its closure, as (extra-generator index subset, ideal).

    All 2^t subsets of the t extra generators when that fits under cap;
    otherwise the empty subset, the full subset, and a seeded random sample.
    """
    if cap < 2:
        raise InputError("cap must allow at least the two endpoint ideals")
    base = edge_ideal(graph).power(s)
    extras = closure_extras(graph, s)
    t = len(extras)
    masks: list[int]
    if 2 ** t <= cap:
        masks = list(range(2 ** t))
    else:
        rng = Random(seed)
        chosen = {0, 2 ** t - 1}
        while len(chosen) < cap:
            chosen.add(rng.randrange(2 ** t))
        masks = sorted(chosen)
    out = []
    for mask in masks:
        idxs = tuple(i for i in range(t) if mask >> i & 1)
        gens = list(base.gens) + [extras[i] for i in idxs]
        out.append((idxs, MonomialIdeal.from_gens(graph.n, gens)))
    return out
