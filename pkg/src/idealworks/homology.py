"""Reduced simplicial homology dimensions over a field, computed exactly.

Complexes enter either as explicit faces or as minimal non-face supports
(bitmasks over 0-based vertex positions).  Dimension vectors use a shifted
index: vec[t] = dim H~_{t-1}, so vec[0] is the (-1)-st reduced homology and
the empty complex {emptyset} has vector (1,), which is also the identity for
the join convolution.  Working over a field makes the join rule exact in
every degree, including -1:

    dim H~_k(X * Y) = sum over i+j = k-1 of dim H~_i(X) * dim H~_j(Y).

Faces containing a vertex that lies in no minimal non-face form a cone, and
cones are acyclic; both shortcuts below are uses of that one fact.
"""

from __future__ import annotations

from typing import Sequence

from .fields import FieldSpec
from .linalg import rank_rows

_comp_cache: dict = {}


def clear_caches() -> None:
    _comp_cache.clear()


def bits(mask: int) -> list[int]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return out


def boundary_ranks(faces_by_dim: Sequence[Sequence[tuple[int, ...]]],
                   field: FieldSpec) -> list[int]:
    """Ranks of the boundary maps d_0..d_(D+1); d_0 is the augmentation to degree -1."""
    ranks = [1 if faces_by_dim and faces_by_dim[0] else 0]
    for d in range(1, len(faces_by_dim)):
        lower = {f: i for i, f in enumerate(faces_by_dim[d - 1])}
        rows = []
        for face in faces_by_dim[d]:
            row = {}
            sign = 1
            for k in range(len(face)):
                sub = face[:k] + face[k + 1:]
                row[lower[sub]] = sign
                sign = -sign
            rows.append(row)
        ranks.append(rank_rows(rows, field))
    ranks.append(0)
    return ranks


def dims_from_faces(faces_by_dim: Sequence[Sequence[tuple[int, ...]]],
                    field: FieldSpec) -> tuple[int, ...]:
    """Shifted homology vector of a nonvoid complex from its faces (empty face implicit)."""
    fvec = [1] + [len(fs) for fs in faces_by_dim]
    ranks = boundary_ranks(faces_by_dim, field)
    # h_d = f_d - rank d_d - rank d_(d+1), with rank d_(-1) = 0
    dims = []
    for d in range(-1, len(faces_by_dim)):
        below = ranks[d] if d >= 0 else 0
        dims.append(fvec[d + 1] - below - ranks[d + 1])
    if any(v < 0 for v in dims):
        raise AssertionError("negative homology dimension; boundary ranks inconsistent")
    euler_h = sum(v if t % 2 == 0 else -v for t, v in enumerate(dims))
    euler_f = sum(v if t % 2 == 0 else -v for t, v in enumerate(fvec))
    if euler_h != euler_f:
        raise AssertionError("Euler characteristic mismatch between faces and homology")
    while len(dims) > 1 and dims[-1] == 0:
        dims.pop()
    return tuple(dims)


def _component_faces(verts: list[int], gens: list[int]) -> list[list[tuple[int, ...]]]:
    """Faces (as sorted vertex tuples) of {F : no gen inside F}, grouped by dimension."""
    by_vertex: dict[int, list[int]] = {v: [] for v in verts}
    for g in gens:
        for v in bits(g):
            by_vertex[v].append(g)
    order = sorted(verts)
    out: list[list[tuple[int, ...]]] = []

    def rec(face: tuple[int, ...], mask: int, start: int) -> None:
        if face:
            d = len(face) - 1
            while len(out) <= d:
                out.append([])
            out[d].append(face)
        for idx in range(start, len(order)):
            v = order[idx]
            nm = mask | (1 << v)
            if any(g & ~nm == 0 for g in by_vertex[v]):
                continue
            rec(face + (v,), nm, idx + 1)

    rec((), 0, 0)
    return out


def convolve(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def homology_shifted(active_mask: int, gen_masks: Sequence[int], field: FieldSpec) -> tuple[int, ...]:
    """Shifted homology vector of the complex {F subset of active : no gen inside F}.

    Preconditions: generators form a minimal antichain of masks with at least
    two bits each, all inside active_mask.  Singleton non-faces must already be
    stripped out of the active set by the caller.
    """
    if not gen_masks:
        return (1,) if active_mask == 0 else (0,)
    covered = 0
    for g in gen_masks:
        covered |= g
    if active_mask & ~covered:
        return (0,)  # free vertex: the complex is a cone
    comps: list[list[int]] = []
    pool = list(gen_masks)
    while pool:
        seed = pool.pop()
        comp = [seed]
        cmask = seed
        changed = True
        while changed:
            changed = False
            rest = []
            for g in pool:
                if g & cmask:
                    comp.append(g)
                    cmask |= g
                    changed = True
                else:
                    rest.append(g)
            pool = rest
        comps.append(comp)
    acc: tuple[int, ...] = (1,)
    for comp in sorted(comps, key=lambda c: (len(c), sorted(c))):
        key = (frozenset(comp), field.char)
        vec = _comp_cache.get(key)
        if vec is None:
            cmask = 0
            for g in comp:
                cmask |= g
            vec = dims_from_faces(_component_faces(bits(cmask), comp), field)
            _comp_cache[key] = vec
        if vec == (0,):
            return (0,)
        acc = convolve(acc, vec)
    return acc
