"""Monomial ideals in S = k[x_1..x_n], represented by minimal generating exponent vectors.

The coefficient field never matters for the ideal algebra itself; everything in
this module is lattice arithmetic on exponent vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import InputError
from .graphs import Graph

ExponentVec = tuple[int, ...]


def deg(vec: Sequence[int]) -> int:
    return sum(vec)


def supp(vec: Sequence[int]) -> frozenset:
    """Support as 1-based variable indices."""
    return frozenset(i + 1 for i, v in enumerate(vec) if v)


def divides(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def vec_lcm(a: Sequence[int], b: Sequence[int]) -> ExponentVec:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_str(vec: Sequence[int]) -> str:
    parts = []
    for i, e in enumerate(vec):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts) if parts else "1"


def minimalize(n: int, gens: Iterable[Sequence[int]]) -> tuple[ExponentVec, ...]:
    """Reduce a generating set to the unique minimal one (antichain under division)."""
    uniq = {tuple(int(v) for v in g) for g in gens}
    for g in uniq:
        if len(g) != n:
            raise InputError(f"generator {g} has wrong length (ambient has {n} variables)")
        if any(v < 0 for v in g):
            raise InputError(f"negative exponent in generator {g}")
    ordered = sorted(uniq, key=lambda g: (sum(g), g))
    kept: list[ExponentVec] = []
    if len(ordered) > 64:
        arr = None
        for g in ordered:
            if arr is not None and bool(np.all(arr <= np.asarray(g, dtype=np.int16), axis=1).any()):
                continue
            kept.append(g)
            row = np.asarray([g], dtype=np.int16)
            arr = row if arr is None else np.concatenate([arr, row])
    else:
        for g in ordered:
            if not any(divides(k, g) for k in kept):
                kept.append(g)
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators, sorted degree-then-lex.

    The zero ideal has no generators; the unit ideal has the single generator 1
    (the all-zero exponent vector).
    """

    n: int
    gens: tuple[ExponentVec, ...]

    @classmethod
    def from_gens(cls, n: int, gens: Iterable[Sequence[int]]) -> "MonomialIdeal":
        return cls(n, minimalize(n, gens))

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, ())

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls(n, ((0,) * n,))

    @classmethod
    def from_json(cls, data: dict) -> "MonomialIdeal":
        if not isinstance(data, dict) or "vars" not in data or "gens" not in data:
            raise InputError('ideal JSON needs keys "vars" and "gens"')
        return cls.from_gens(int(data["vars"]), [tuple(g) for g in data["gens"]])

    def to_json(self) -> dict:
        return {"vars": self.n, "gens": [list(g) for g in self.gens]}

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    @property
    def is_squarefree(self) -> bool:
        return all(v <= 1 for g in self.gens for v in g)

    def contains(self, vec: Sequence[int]) -> bool:
        v = tuple(vec)
        if len(v) != self.n:
            raise InputError("exponent vector has wrong length")
        return any(divides(g, v) for g in self.gens)

    def product(self, other: "MonomialIdeal") -> "MonomialIdeal":
        if other.n != self.n:
            raise InputError("ambient mismatch")
        if self.is_zero or other.is_zero:
            return MonomialIdeal.zero(self.n)
        prods = [tuple(a + b for a, b in zip(f, g)) for f in self.gens for g in other.gens]
        return MonomialIdeal.from_gens(self.n, prods)

    def power(self, s: int) -> "MonomialIdeal":
        if s < 1:
            raise InputError("power wants s >= 1")
        out = self
        for _ in range(s - 1):
            out = out.product(self)
        return out

    def radical_colon(self, vec: Sequence[int]) -> "MonomialIdeal":
        """The radical of (I : x^vec); the unit ideal signals x^vec in I."""
        v = tuple(int(t) for t in vec)
        if len(v) != self.n:
            raise InputError("exponent vector has wrong length")
        if any(t < 0 for t in v):
            raise InputError("negative exponent")
        out = []
        for g in self.gens:
            residual = tuple(1 if e > a else 0 for e, a in zip(g, v))
            if not any(residual):
                return MonomialIdeal.unit(self.n)
            out.append(residual)
        return MonomialIdeal.from_gens(self.n, out)

    def intersection(self, other: "MonomialIdeal") -> "MonomialIdeal":
        if other.n != self.n:
            raise InputError("ambient mismatch")
        if self.is_zero or other.is_zero:
            return MonomialIdeal.zero(self.n)
        lcms = [vec_lcm(f, g) for f in self.gens for g in other.gens]
        return MonomialIdeal.from_gens(self.n, lcms)

    def restriction(self, variables: Iterable[int]) -> "MonomialIdeal":
        """Sub-ideal of generators supported inside the given 1-based variable set."""
        keep = set(variables)
        if any(not 1 <= v <= self.n for v in keep):
            raise InputError("variable out of range")
        return MonomialIdeal(self.n, tuple(g for g in self.gens if supp(g) <= keep))

    def rho(self, j: int) -> int:
        """Largest exponent of x_j among the minimal generators."""
        if not 1 <= j <= self.n:
            raise InputError("variable out of range")
        return max((g[j - 1] for g in self.gens), default=0)

    def ord(self, vec: Sequence[int]) -> int:
        """Largest t with x^vec in I^t (0 when no generator divides x^vec)."""
        if self.is_unit:
            raise InputError("ord is unbounded for the unit ideal")
        v = tuple(int(t) for t in vec)
        if len(v) != self.n:
            raise InputError("exponent vector has wrong length")
        if self.is_zero:
            return 0
        mindeg = min(deg(g) for g in self.gens)
        memo: dict[ExponentVec, int] = {}

        def rec(w: ExponentVec) -> int:
            cached = memo.get(w)
            if cached is not None:
                return cached
            cap = deg(w) // mindeg
            best = 0
            if cap:
                for g in self.gens:
                    if divides(g, w):
                        best = max(best, 1 + rec(tuple(a - b for a, b in zip(w, g))))
                        if best == cap:
                            break
            memo[w] = best
            return best

        return rec(v)


def edge_ideal(graph: Graph) -> MonomialIdeal:
    """I(G), generated by x_i x_j over the edges of G."""
    gens = []
    for u, v in graph.edges:
        g = [0] * graph.n
        g[u - 1] = 1
        g[v - 1] = 1
        gens.append(tuple(g))
    return MonomialIdeal.from_gens(graph.n, gens)
