"""Simplicial complexes on ground set 1..n and the Stanley-Reisner correspondence.

Two degenerate complexes are kept distinct throughout: the void complex (no
faces at all, the Stanley-Reisner partner of the unit ideal) and the empty
complex {emptyset} (the partner of the maximal ideal).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable, Iterator, Sequence

from . import homology
from .errors import InputError
from .fields import FieldSpec
from .graphs import minimal_transversals
from .monomials import MonomialIdeal, supp


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex given by its facets; facets=None is void, ((),) is {emptyset}."""

    n: int
    facets: tuple[tuple[int, ...], ...] | None
    _nonfaces: tuple | None = dc_field(default=None, compare=False, repr=False)

    @classmethod
    def void(cls, n: int) -> "SimplicialComplex":
        return cls(n, None)

    @classmethod
    def empty(cls, n: int) -> "SimplicialComplex":
        return cls(n, ((),))

    @classmethod
    def full_simplex(cls, n: int) -> "SimplicialComplex":
        return cls(n, (tuple(range(1, n + 1)),)) if n else cls.empty(0)

    @classmethod
    def from_facets(cls, n: int, faces: Iterable[Sequence[int]]) -> "SimplicialComplex":
        norm = set()
        for f in faces:
            t = tuple(sorted(set(int(v) for v in f)))
            if any(not 1 <= v <= n for v in t):
                raise InputError(f"facet {f!r} out of range 1..{n}")
            norm.add(t)
        if not norm:
            return cls.void(n)
        maximal = [t for t in norm if not any(set(t) < set(o) for o in norm)]
        return cls(n, tuple(sorted(maximal)))

    @property
    def is_void(self) -> bool:
        return self.facets is None

    @property
    def is_empty(self) -> bool:
        return self.facets == ((),)

    @property
    def state(self) -> str:
        if self.is_void:
            return "void"
        if self.is_empty:
            return "empty"
        return "facets"

    @property
    def dim(self) -> int | None:
        if self.is_void:
            return None
        return max(len(f) for f in self.facets) - 1

    def vertices(self) -> tuple[int, ...]:
        if self.is_void:
            return ()
        out: set[int] = set()
        for f in self.facets:
            out |= set(f)
        return tuple(sorted(out))

    @classmethod
    def from_json(cls, data: dict) -> "SimplicialComplex":
        if not isinstance(data, dict) or "n" not in data or "state" not in data:
            raise InputError('complex JSON needs keys "n", "facets", "state"')
        n = int(data["n"])
        state = data["state"]
        if state == "void":
            return cls.void(n)
        if state == "empty":
            return cls.empty(n)
        if state == "facets":
            facets = data.get("facets")
            if not facets:
                raise InputError('state "facets" requires a nonempty facet list')
            return cls.from_facets(n, facets)
        raise InputError(f"unknown state {state!r}")

    def to_json(self) -> dict:
        if self.is_void:
            return {"n": self.n, "facets": [], "state": "void"}
        if self.is_empty:
            return {"n": self.n, "facets": [[]], "state": "empty"}
        return {"n": self.n, "facets": [list(f) for f in self.facets], "state": "facets"}

    def has_face(self, face: Iterable[int]) -> bool:
        if self.is_void:
            return False
        f = set(face)
        return any(f <= set(b) for b in self.facets)

    def faces(self) -> Iterator[tuple[int, ...]]:
        """All faces including the empty one; nothing for the void complex."""
        if self.is_void:
            return
        seen: set[tuple[int, ...]] = set()
        from itertools import combinations
        for b in self.facets:
            for k in range(len(b) + 1):
                for c in combinations(b, k):
                    seen.add(c)
        yield from sorted(seen, key=lambda f: (len(f), f))

    def face_counts(self) -> list[int]:
        """f-vector [f_(-1), f_0, ..., f_dim]."""
        if self.is_void:
            return []
        counts: dict[int, int] = {}
        for f in self.faces():
            counts[len(f)] = counts.get(len(f), 0) + 1
        return [counts.get(k, 0) for k in range(max(counts) + 1)]

    def link(self, face: Iterable[int]) -> "SimplicialComplex":
        f = frozenset(face)
        if self.is_void or not self.has_face(f):
            raise InputError(f"{tuple(sorted(f))} is not a face, so its link is undefined")
        facets = tuple(sorted(tuple(v for v in b if v not in f)
                              for b in self.facets if f <= set(b)))
        nf = None
        if self._nonfaces is not None:
            stripped = {frozenset(s - f) for s in map(frozenset, self._nonfaces)}
            nf = tuple(sorted((tuple(sorted(s)) for s in stripped
                               if not any(o < s for o in stripped)), key=lambda t: (len(t), t)))
        return SimplicialComplex(self.n, facets, nf)

    def is_cone(self, apex: int) -> bool:
        if self.is_void:
            raise InputError("the void complex has no cone structure")
        if not 1 <= apex <= self.n:
            raise InputError("apex out of range")
        return all(apex in f for f in self.facets)

    def reduced_homology_dims(self, field: FieldSpec) -> dict[int, int]:
        """dim_k H~_d for d = -1..dim; {} for the void complex."""
        if self.is_void:
            return {}
        if self.is_empty:
            return {-1: 1}
        d = self.dim
        if self._nonfaces is not None:
            active = 0
            for v in self.vertices():
                active |= 1 << (v - 1)
            gens = []
            for s in self._nonfaces:
                if len(s) >= 2:
                    m = 0
                    for v in s:
                        m |= 1 << (v - 1)
                    gens.append(m)
            vec = homology.homology_shifted(active, gens, field)
        else:
            by_dim: list[list[tuple[int, ...]]] = [[] for _ in range(d + 1)]
            for f in self.faces():
                if f:
                    by_dim[len(f) - 1].append(f)
            vec = homology.dims_from_faces(by_dim, field)
        return {k: (vec[k + 1] if k + 1 < len(vec) else 0) for k in range(-1, d + 1)}


def cone_acyclicity_check(complex_: SimplicialComplex, apex: int, field: FieldSpec) -> bool:
    """Confirm that a cone has vanishing reduced homology in every degree."""
    if not complex_.is_cone(apex):
        raise InputError(f"vertex {apex} is not an apex")
    return all(v == 0 for v in complex_.reduced_homology_dims(field).values())


def sr_complex(ideal: MonomialIdeal) -> SimplicialComplex:
    """Stanley-Reisner complex of a squarefree ideal: faces are the monomials outside it."""
    if not ideal.is_squarefree:
        raise InputError("Stanley-Reisner complexes need a squarefree ideal")
    n = ideal.n
    if ideal.is_zero:
        return SimplicialComplex.full_simplex(n)
    if ideal.is_unit:
        return SimplicialComplex.void(n)
    supports = [supp(g) for g in ideal.gens]
    covers = minimal_transversals([frozenset(s) for s in supports])
    universe = set(range(1, n + 1))
    facets = tuple(sorted(tuple(sorted(universe - c)) for c in covers))
    nonfaces = tuple(sorted((tuple(sorted(s)) for s in supports), key=lambda t: (len(t), t)))
    return SimplicialComplex(n, facets, nonfaces)


def sr_ideal(complex_: SimplicialComplex) -> MonomialIdeal:
    """Squarefree ideal of minimal non-faces; inverse to sr_complex."""
    if complex_.is_void:
        raise InputError("the void complex corresponds to the unit ideal; not produced here")
    n = complex_.n
    universe = frozenset(range(1, n + 1))
    if complex_.is_empty:
        gens = [frozenset([v]) for v in universe]
    else:
        complements = [universe - set(f) for f in complex_.facets]
        if any(not c for c in complements):
            return MonomialIdeal.zero(n)
        gens = minimal_transversals(complements)
    vecs = []
    for g in gens:
        vecs.append(tuple(1 if v in g else 0 for v in range(1, n + 1)))
    return MonomialIdeal.from_gens(n, vecs)
