"""Finite simple graphs on vertices 1..n, with the combinatorics the workbench needs."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import InputError


def minimal_transversals(sets: Sequence[frozenset]) -> list[frozenset]:
    """Inclusion-minimal hitting sets of a family, by branching on the first unhit set."""
    family = [frozenset(s) for s in sets]
    if any(not s for s in family):
        raise InputError("cannot hit an empty set")
    found: set[frozenset] = set()

    def rec(chosen: frozenset, remaining: list[frozenset]) -> None:
        if not remaining:
            found.add(chosen)
            return
        for v in sorted(remaining[0]):
            rec(chosen | {v}, [s for s in remaining[1:] if v not in s])

    rec(frozenset(), family)
    out = [t for t in found if not any(o < t for o in found)]
    return sorted(out, key=sorted)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; vertices are 1..n, edges stored as (i, j) with i < j."""

    n: int
    edges: tuple[tuple[int, int], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        if n < 0:
            raise InputError("vertex count must be nonnegative")
        norm = set()
        for e in edges:
            if len(e) != 2:
                raise InputError(f"edge {e!r} is not a pair")
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise InputError(f"loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise InputError(f"edge ({u},{v}) out of range 1..{n}")
            pair = (u, v) if u < v else (v, u)
            if pair in norm:
                raise InputError(f"duplicate edge {pair}")
            norm.add(pair)
        return cls(n, tuple(sorted(norm)))

    @classmethod
    def from_json(cls, data: dict) -> "Graph":
        if not isinstance(data, dict) or "n" not in data or "edges" not in data:
            raise InputError('graph JSON needs keys "n" and "edges"')
        return cls.from_edges(int(data["n"]), data["edges"])

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @cached_property
    def adj(self) -> dict[int, frozenset]:
        nbr: dict[int, set] = {v: set() for v in range(1, self.n + 1)}
        for u, v in self.edges:
            nbr[u].add(v)
            nbr[v].add(u)
        return {v: frozenset(s) for v, s in nbr.items()}

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def open_neighborhood(self, vertices: Iterable[int]) -> frozenset:
        vs = set(vertices)
        out: set[int] = set()
        for v in vs:
            out |= self.adj[v]
        return frozenset(out - vs)

    def closed_neighborhood(self, vertices: Iterable[int]) -> frozenset:
        vs = frozenset(vertices)
        return vs | self.open_neighborhood(vs)

    def is_independent_set(self, vertices: Iterable[int]) -> bool:
        vs = sorted(set(vertices))
        return not any(self.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1:])

    def girth(self) -> float:
        """Length of a shortest cycle, math.inf for forests."""
        best = math.inf
        for s in range(1, self.n + 1):
            dist = {s: 0}
            parent = {s: 0}
            frontier = [s]
            while frontier:
                nxt = []
                for u in frontier:
                    if 2 * dist[u] >= best:
                        continue
                    for w in self.adj[u]:
                        if w not in dist:
                            dist[w] = dist[u] + 1
                            parent[w] = u
                            nxt.append(w)
                        elif parent[u] != w and parent[w] != u:
                            best = min(best, dist[u] + dist[w] + 1)
                frontier = nxt
        return best

    def enumerate_odd_cycles(self, max_len: int | None = None,
                             induced_only: bool = False) -> list[tuple[int, ...]]:
        """All odd simple cycles as vertex tuples, canonical and sorted.

        Canonical form: minimum vertex first, then the direction whose second
        vertex is smaller than its last.  Each cycle appears exactly once.
        """
        cycles: list[tuple[int, ...]] = []

        def record(path: tuple[int, ...]) -> None:
            if induced_only:
                vs = set(path)
                chords = sum(1 for u in vs for w in self.adj[u] if w in vs) // 2
                if chords != len(path):
                    return
            cycles.append(path)

        for root in range(1, self.n + 1):
            stack = [(root,)]
            while stack:
                path = stack.pop()
                last = path[-1]
                for w in sorted(self.adj[last], reverse=True):
                    if w == root and len(path) >= 3:
                        if len(path) % 2 == 1 and path[1] < path[-1]:
                            record(path)
                    elif w > root and w not in path:
                        if max_len is None or len(path) < max_len:
                            stack.append(path + (w,))
        return sorted(cycles, key=lambda c: (len(c), c))

    def induced_matching_number(self) -> int:
        """Largest set of edges pairwise disjoint with no edge between them."""
        es = list(self.edges)
        k = len(es)
        compat = [[False] * k for _ in range(k)]
        for i in range(k):
            a, b = es[i]
            for j in range(i + 1, k):
                c, d = es[j]
                if len({a, b, c, d}) == 4 and not any(
                        self.has_edge(x, y) for x in (a, b) for y in (c, d)):
                    compat[i][j] = compat[j][i] = True
        best = 0

        def rec(cands: list[int], count: int) -> None:
            nonlocal best
            best = max(best, count)
            while cands:
                if count + len(cands) <= best:
                    return
                e = cands[0]
                cands = cands[1:]
                rec([f for f in cands if compat[e][f]], count + 1)

        rec(list(range(k)), 0)
        return best

    def minimal_vertex_covers(self) -> list[tuple[int, ...]]:
        """All inclusion-minimal vertex covers, sorted."""
        covers = minimal_transversals([frozenset(e) for e in self.edges])
        return [tuple(sorted(c)) for c in covers]

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", dict[int, int]]:
        """Subgraph induced on the given vertices, relabeled 1..k in ascending order."""
        vs = sorted(set(vertices))
        if any(not 1 <= v <= self.n for v in vs):
            raise InputError("vertex out of range")
        relabel = {v: i + 1 for i, v in enumerate(vs)}
        edges = [(relabel[u], relabel[v]) for u, v in self.edges if u in relabel and v in relabel]
        return Graph.from_edges(len(vs), edges), relabel

    def disjoint_union(self, other: "Graph") -> "Graph":
        shifted = [(u + self.n, v + self.n) for u, v in other.edges]
        return Graph.from_edges(self.n + other.n, list(self.edges) + shifted)

    def complement(self) -> "Graph":
        es = set(self.edges)
        comp = [(u, v) for u in range(1, self.n + 1) for v in range(u + 1, self.n + 1)
                if (u, v) not in es]
        return Graph.from_edges(self.n, comp)

    def connected_components(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        comps = []
        for s in range(1, self.n + 1):
            if s in seen:
                continue
            comp = {s}
            frontier = [s]
            while frontier:
                u = frontier.pop()
                for w in self.adj[u]:
                    if w not in comp:
                        comp.add(w)
                        frontier.append(w)
            seen |= comp
            comps.append(tuple(sorted(comp)))
        return comps


def cycle_graph(n: int) -> Graph:
    """The cycle on n vertices (n >= 3)."""
    if n < 3:
        raise InputError("cycles need at least 3 vertices")
    return Graph.from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)])
