"""Castelnuovo-Mumford regularity of monomial ideals via degree-complex sweeps.

reg(S/I) is the maximum of |a| + i over exponent vectors a and faces F of the
degree complex of I at a with F disjoint from supp(a), where the i-1st reduced
homology of the link of F is nonzero.  The sweep runs over the finite box
a_j < rho_j(I) and is exact over any supported coefficient field.

Pruning used by the sweep, both consequences of cones being acyclic:
* if some vertex of the degree complex lies in supp(a) and in no minimal
  non-face, every admissible link is a cone over it, so the whole level a is
  silent (disabled by no_prune so the unpruned sweep can be compared);
* any individual link with a free vertex is skipped.
A level whose complex is a cone over a vertex outside supp(a) is NOT skipped:
faces through the apex still contribute (their links drop the apex).
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product as iproduct
from typing import Iterator, Sequence

import numpy as np

from .errors import InputError
from .fields import FieldSpec
from .graphs import Graph
from .homology import homology_shifted
from .monomials import ExponentVec, MonomialIdeal, edge_ideal
from .simplicial import SimplicialComplex, sr_complex


@dataclass(frozen=True)
class RegCertificate:
    """A witness for reg(S/I): reg(S/I) = |a| + i via H~_(i-1)(lk F) != 0."""

    a: ExponentVec
    i: int
    face: tuple[int, ...]
    hom_dim: int
    field: FieldSpec

    def to_json(self, reg: int) -> dict:
        return {"reg": reg, "a": list(self.a), "i": self.i,
                "face": list(self.face), "hom_dim": self.hom_dim,
                "field": str(self.field)}


def degree_complex(ideal: MonomialIdeal, a: Sequence[int]) -> SimplicialComplex:
    """Stanley-Reisner complex of the radical of (I : x^a); void when x^a in I."""
    if ideal.is_zero:
        raise InputError("degree complexes need a nonzero ideal")
    rad = ideal.radical_colon(a)
    if rad.is_unit:
        return SimplicialComplex.void(ideal.n)
    return sr_complex(rad)


def gamma_box(ideal: MonomialIdeal) -> Iterator[ExponentVec]:
    """Lex stream of the box a_j < rho_j (a_j = 0 where rho_j = 0), skipping a with x^a in I."""
    if ideal.is_zero or ideal.is_unit:
        raise InputError("the box is defined for proper nonzero ideals")
    ranges = [range(max(ideal.rho(j), 1)) for j in range(1, ideal.n + 1)]
    for a in iproduct(*ranges):
        if not ideal.contains(a):
            yield a


def _minimal_masks(masks: Sequence[int]) -> tuple[int, ...]:
    """Antichain of bitmasks under inclusion; input need not be sorted."""
    ordered = sorted(set(masks), key=lambda m: (bin(m).count("1"), m))
    kept: list[int] = []
    for m in ordered:
        if not any(k & ~m == 0 for k in kept):
            kept.append(m)
    return tuple(kept)


class _Sweeper:
    """Evaluates max i for one exponent level a, with caching across levels."""

    def __init__(self, ideal: MonomialIdeal, field: FieldSpec, prune: bool = True):
        self.n = ideal.n
        self.field = field
        self.prune = prune
        if self.n > 62:
            raise InputError("sweeps support at most 62 variables")
        self.gens = np.asarray(ideal.gens, dtype=np.int16)
        self.pow2 = (1 << np.arange(self.n, dtype=np.int64))
        self.full_mask = (1 << self.n) - 1
        self._raw_cache: dict = {}
        self._sweep_cache: dict = {}

    def colon_mask_rows(self, block: np.ndarray) -> np.ndarray:
        """Support masks of radical (I : x^a) for each row a of the block."""
        over = self.gens[None, :, :] > block[:, None, :]
        return over.astype(np.int64) @ self.pow2

    def level_value(self, a: tuple, mask_row: np.ndarray) -> int | None:
        """|a| + max i at level a, or None when the level is silent."""
        uniq = np.unique(mask_row)
        if uniq[0] == 0:
            return None  # x^a lies in the ideal: void complex
        smask = 0
        for j, v in enumerate(a):
            if v:
                smask |= 1 << j
        key = (uniq.tobytes(), smask)
        cached = self._raw_cache.get(key, -1)
        if cached != -1:
            best = cached
        else:
            best = self._sweep(_minimal_masks(uniq.tolist()), smask)
            self._raw_cache[key] = best
        if best is None:
            return None
        return sum(a) + best

    def _sweep(self, masks: tuple[int, ...], smask: int) -> int | None:
        excluded = 0
        gens2 = []
        for m in masks:
            if m & (m - 1):
                gens2.append(m)
            else:
                excluded |= m
        active = self.full_mask & ~excluded
        smask &= active
        key = (masks, smask)
        if key in self._sweep_cache:
            return self._sweep_cache[key]
        covered = 0
        for g in gens2:
            covered |= g
        if self.prune and (active & ~covered & smask):
            # a free vertex of the complex inside supp(a): every admissible
            # link keeps it free, so every contribution vanishes
            self._sweep_cache[key] = None
            return None
        best = self._faces_max(active, smask, gens2)
        self._sweep_cache[key] = best
        return best

    def _faces_max(self, active: int, smask: int, gens2: list[int]) -> int | None:
        allowed = active & ~smask
        order = [v for v in range(self.n) if allowed >> v & 1]
        by_vertex: dict[int, list[int]] = {v: [] for v in order}
        for g in gens2:
            if g & ~allowed == 0:
                for v in order:
                    if g >> v & 1:
                        by_vertex[v].append(g)
        best: int | None = None
        stack: list[tuple[int, int]] = [(0, 0)]
        while stack:
            fmask, start = stack.pop()
            contrib = self._link_max(fmask, active, gens2)
            if contrib is not None and (best is None or contrib > best):
                best = contrib
            for idx in range(start, len(order)):
                v = order[idx]
                nm = fmask | (1 << v)
                if all(g & ~nm for g in by_vertex[v]):
                    stack.append((nm, idx + 1))
        return best

    def _link_masks(self, fmask: int, gens2: list[int]) -> tuple[int, ...]:
        return _minimal_masks([g & ~fmask for g in gens2])

    def _link_max(self, fmask: int, active: int, gens2: list[int]) -> int | None:
        """Largest i with H~_(i-1)(lk F) != 0, or None when the link is acyclic."""
        vec = self._link_vec(fmask, active, gens2)
        top = max((t for t, v in enumerate(vec) if v), default=None)
        return top

    def _link_vec(self, fmask: int, active: int, gens2: list[int]) -> tuple[int, ...]:
        stripped = self._link_masks(fmask, gens2) if fmask else tuple(gens2)
        link_excluded = 0
        link_gens = []
        for m in stripped:
            if m & (m - 1):
                link_gens.append(m)
            else:
                link_excluded |= m
        link_active = active & ~fmask & ~link_excluded
        return homology_shifted(link_active, link_gens, self.field)

    def level_details(self, a: tuple, want_i: int) -> list[tuple[tuple[int, ...], int]]:
        """Faces at level a contributing exactly i = want_i, with homology dims."""
        row = self.colon_mask_rows(np.asarray([a], dtype=np.int16))[0]
        uniq = np.unique(row)
        if uniq[0] == 0:
            return []
        masks = _minimal_masks(uniq.tolist())
        excluded = 0
        gens2 = []
        for m in masks:
            if m & (m - 1):
                gens2.append(m)
            else:
                excluded |= m
        active = self.full_mask & ~excluded
        smask = 0
        for j, v in enumerate(a):
            if v:
                smask |= 1 << j
        allowed = active & ~smask
        order = [v for v in range(self.n) if allowed >> v & 1]
        by_vertex = {v: [g for g in gens2 if g >> v & 1 and g & ~allowed == 0] for v in order}
        out = []
        stack: list[tuple[int, int]] = [(0, 0)]
        while stack:
            fmask, start = stack.pop()
            vec = self._link_vec(fmask, active, gens2)
            if want_i < len(vec) and vec[want_i]:
                face = tuple(v + 1 for v in range(self.n) if fmask >> v & 1)
                out.append((face, vec[want_i]))
            for idx in range(start, len(order)):
                v = order[idx]
                nm = fmask | (1 << v)
                if all(g & ~nm for g in by_vertex[v]):
                    stack.append((nm, idx + 1))
        return sorted(out)


_worker_sweeper: _Sweeper | None = None
_worker_shape: tuple | None = None


def _init_worker(gens: tuple, n: int, char: int, prune: bool, shape: tuple) -> None:
    global _worker_sweeper, _worker_shape
    _worker_sweeper = _Sweeper(MonomialIdeal(n, gens), FieldSpec(char), prune)
    _worker_shape = shape


def _scan_range(bounds: tuple[int, int]) -> tuple[int | None, list[tuple]]:
    sw = _worker_sweeper
    assert sw is not None and _worker_shape is not None
    return _scan(sw, _worker_shape, bounds[0], bounds[1])


def _scan(sw: _Sweeper, shape: tuple, start: int, stop: int,
          chunk: int = 2048) -> tuple[int | None, list[tuple]]:
    """Best |a|+i over lex positions [start, stop) and all a attaining it, in lex order."""
    best: int | None = None
    arg: list[tuple] = []
    for lo in range(start, stop, chunk):
        hi = min(lo + chunk, stop)
        idx = np.unravel_index(np.arange(lo, hi), shape)
        block = np.stack(idx, axis=1).astype(np.int16)
        rows = sw.colon_mask_rows(block)
        for r in range(hi - lo):
            a = tuple(int(v) for v in block[r])
            val = sw.level_value(a, rows[r])
            if val is None:
                continue
            if best is None or val > best:
                best, arg = val, [a]
            elif val == best:
                arg.append(a)
    return best, arg


def _box_shape(ideal: MonomialIdeal) -> tuple[int, ...]:
    return tuple(max(ideal.rho(j), 1) for j in range(1, ideal.n + 1))


def _full_scan(ideal: MonomialIdeal, field: FieldSpec, no_prune: bool,
               threads: int) -> tuple[int, list[tuple], _Sweeper]:
    if ideal.is_zero or ideal.is_unit:
        raise InputError("regularity is defined for proper nonzero ideals")
    shape = _box_shape(ideal)
    total = 1
    for w in shape:
        total *= w
    sweeper = _Sweeper(ideal, field, prune=not no_prune)
    if threads > 1 and total >= 4096:
        nw = min(threads, os.cpu_count() or 1)
        step = -(-total // (nw * 4))
        ranges = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
        best: int | None = None
        arg: list[tuple] = []
        with ProcessPoolExecutor(max_workers=nw, initializer=_init_worker,
                                 initargs=(ideal.gens, ideal.n, field.char,
                                           not no_prune, shape)) as pool:
            for b, a_list in pool.map(_scan_range, ranges):
                if b is None:
                    continue
                if best is None or b > best:
                    best, arg = b, list(a_list)
                elif b == best:
                    arg.extend(a_list)
    else:
        best, arg = _scan(sweeper, shape, 0, total)
    if best is None:
        raise AssertionError("sweep found no contribution; a = 0 always contributes")
    return best, arg, sweeper


def takayama_regularity(ideal: MonomialIdeal, field: FieldSpec = FieldSpec(0), *,
                        no_prune: bool = False, threads: int = 1) -> tuple[int, RegCertificate]:
    """reg of a proper nonzero monomial ideal, with a maximizing certificate.

    Returns (reg I, certificate); the certificate witnesses reg(S/I) = reg I - 1
    and ties are broken lex-least in a, then in the face.
    """
    best, arg, sweeper = _full_scan(ideal, field, no_prune, threads)
    a_star = arg[0]
    i_star = best - sum(a_star)
    details = sweeper.level_details(a_star, i_star)
    face, hom_dim = details[0]
    cert = RegCertificate(a_star, i_star, face, hom_dim, field)
    return best + 1, cert


def extremal_exponents(ideal: MonomialIdeal, field: FieldSpec = FieldSpec(0), *,
                       no_prune: bool = False, threads: int = 1) -> list[RegCertificate]:
    """All certificates attaining reg(S/I), sorted lex by (a, face)."""
    best, arg, sweeper = _full_scan(ideal, field, no_prune, threads)
    out = []
    for a in sorted(arg):
        i = best - sum(a)
        for face, hom_dim in sweeper.level_details(a, i):
            out.append(RegCertificate(a, i, face, hom_dim, field))
    return out


def criterion_in_power_check(graph: Graph, s: int, a: Sequence[int],
                             face: Sequence[int]) -> bool:
    """Degree test for x_F in the radical of (I(G)^s : x^a) over an independent F.

    Sufficient always; also necessary when x_F is a minimal generator of the
    radical colon ideal.
    """
    f = sorted(set(face))
    if not graph.is_independent_set(f):
        raise InputError("the face must be an independent set")
    v = tuple(int(t) for t in a)
    if len(v) != graph.n:
        raise InputError("exponent vector has wrong length")
    nbrs = graph.open_neighborhood(f)
    closed = set(f) | nbrs
    outside = [u for u in range(1, graph.n + 1) if u not in closed]
    ideal = edge_ideal(graph).restriction(outside)
    w = tuple(v[u - 1] if u in outside else 0 for u in range(1, graph.n + 1))
    return sum(v[j - 1] for j in nbrs) + ideal.ord(w) >= s


def mixed_sum_regularity(regs_a: Sequence[int], regs_b: Sequence[int], s: int) -> int:
    """reg of P^s for P = I + J in disjoint variables, from reg I^1..I^s and reg J^1..J^s."""
    if s < 1:
        raise InputError("mixed sum wants s >= 1")
    if len(regs_a) < s or len(regs_b) < s:
        raise InputError(f"need regularities of powers 1..{s} on both sides")
    vals = []
    for i in range(1, s):
        vals.append(regs_a[i - 1] + regs_b[s - i - 1])
    for j in range(1, s + 1):
        vals.append(regs_a[j - 1] + regs_b[s - j] - 1)
    return max(vals)
