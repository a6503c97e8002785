"""Exact linear algebra over Q and GF(p): ranks and an exact LP feasibility test.

Everything here is integer or rational arithmetic; no floating point is used
anywhere, so results are exact by construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InputError
from .fields import FieldSpec


def _canonical_entry(value, field: FieldSpec):
    if field.is_rational:
        return Fraction(value)
    p = field.char
    v = Fraction(value)
    if v.denominator % p == 0:
        raise InputError(f"entry {value} has no image in GF({p})")
    return v.numerator * pow(v.denominator, -1, p) % p


@dataclass(frozen=True)
class ExactMatrix:
    """Dense matrix with entries canonical for a given field.

    Over Q entries are Fractions in lowest terms; over GF(p) they are ints in
    [0, p).  Construct via from_rows so canonicalization always happens.
    """

    nrows: int
    ncols: int
    entries: tuple
    field: FieldSpec

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], field: FieldSpec = FieldSpec(0)) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise InputError("ragged matrix")
        ent = tuple(tuple(_canonical_entry(v, field) for v in r) for r in rows)
        return cls(nrows, ncols, ent, field)

    def transpose(self) -> "ExactMatrix":
        ent = tuple(zip(*self.entries)) if self.entries else ()
        return ExactMatrix(self.ncols, self.nrows, ent, self.field)


def _clear_denominators(row: dict) -> dict:
    """Scale a sparse rational row to coprime integers; rank is scale-invariant."""
    den = 1
    for v in row.values():
        if isinstance(v, Fraction):
            den = den * v.denominator // math.gcd(den, v.denominator)
    out = {}
    g = 0
    for c, v in row.items():
        iv = int(v * den) if isinstance(v, Fraction) else int(v) * den
        if iv:
            out[c] = iv
            g = math.gcd(g, iv)
    if g > 1:
        out = {c: v // g for c, v in out.items()}
    return out


def _rank_gf2(rows: Iterable[dict]) -> int:
    pivots: dict[int, int] = {}
    for row in rows:
        bits = 0
        for c, v in row.items():
            if v % 2:
                bits ^= 1 << c
        while bits:
            lead = bits.bit_length() - 1
            other = pivots.get(lead)
            if other is None:
                pivots[lead] = bits
                break
            bits ^= other
    return len(pivots)


def _rank_gfp(rows: list[dict], p: int) -> int:
    work = []
    for row in rows:
        r = {c: v % p for c, v in row.items() if v % p}
        if r:
            work.append(r)
    rank = 0
    while work:
        # pivot row: fewest nonzeros, then first encountered
        bi = min(range(len(work)), key=lambda i: (len(work[i]), i))
        prow = work.pop(bi)
        pcol = min(prow)
        pinv = pow(prow[pcol], -1, p)
        prow = {c: (v * pinv) % p for c, v in prow.items()}
        rank += 1
        nxt = []
        for row in work:
            f = row.get(pcol)
            if f:
                row = {c: v for c, v in ((c, (row.get(c, 0) - f * prow.get(c, 0)) % p)
                                         for c in set(row) | set(prow)) if v}
            if row:
                nxt.append(row)
        work = nxt
    return rank


def _rank_char0(rows: list[dict]) -> int:
    """Rank over Q of integer sparse rows, by elimination preferring unit pivots.

    Row updates are two-term integer combinations followed by a gcd reduction;
    scaling rows never changes the rank, so the result is exact.
    """
    work = [dict(r) for r in rows if r]
    rank = 0
    while work:
        def key(i: int):
            row = work[i]
            unit = 0 if any(v == 1 or v == -1 for v in row.values()) else 1
            return (unit, len(row), i)

        bi = min(range(len(work)), key=key)
        prow = work.pop(bi)
        units = [c for c, v in prow.items() if v in (1, -1)]
        if units:
            pcol = min(units)
        else:
            small = min(abs(v) for v in prow.values())
            pcol = min(c for c, v in prow.items() if abs(v) == small)
        pv = prow[pcol]
        rank += 1
        nxt = []
        for row in work:
            f = row.get(pcol)
            if f:
                merged = {}
                g = 0
                for c in set(row) | set(prow):
                    v = row.get(c, 0) * pv - f * prow.get(c, 0)
                    if v:
                        merged[c] = v
                        g = math.gcd(g, v)
                row = {c: v // g for c, v in merged.items()} if g > 1 else merged
            if row:
                nxt.append(row)
        work = nxt
    return rank


def rank_rows(rows: Iterable[dict], field: FieldSpec) -> int:
    """Rank of a sparse integer/rational matrix given as {col: value} rows."""
    if field.is_rational:
        cleaned = [_clear_denominators(dict(r)) for r in rows]
        return _rank_char0([r for r in cleaned if r])
    p = field.char
    reduced = []
    for row in rows:
        rr = {}
        for c, v in dict(row).items():
            iv = _canonical_entry(v, field)
            if iv:
                rr[c] = iv
        if rr:
            reduced.append(rr)
    if p == 2:
        return _rank_gf2(reduced)
    return _rank_gfp(reduced, p)


def rank(matrix, field: FieldSpec | None = None) -> int:
    """Rank of a dense matrix (ExactMatrix or nested sequences) over a field."""
    if isinstance(matrix, ExactMatrix):
        f = field if field is not None else matrix.field
        rows = matrix.entries
    else:
        f = field if field is not None else FieldSpec(0)
        rows = matrix
    sparse = [{j: v for j, v in enumerate(row) if v} for row in rows]
    return rank_rows(sparse, f)


def _row_reduce_gcd(vec: list[int], den: int) -> tuple[list[int], int]:
    g = den
    for v in vec:
        g = math.gcd(g, v)
        if g == 1:
            return vec, den
    if g > 1:
        vec = [v // g for v in vec]
        den //= g
    return vec, den


def lp_feasible_convex_cover(points: Sequence[Sequence[int]], target: Sequence[int]) -> bool:
    """Decide exactly whether some convex combination of the points is <= target.

    Feasibility of {c >= 0, sum c_i = 1, sum_i c_i * points_i <= target},
    solved by a phase-1 simplex over the rationals.  The tableau is kept as
    integer rows with a positive denominator per row, and Bland's rule on the
    true (sign of numerator) values guarantees termination.
    """
    tgt = [int(t) for t in target]
    n = len(tgt)
    if any(t < 0 for t in tgt):
        raise InputError("target exponents must be nonnegative")
    pts = []
    for p in points:
        p = [int(v) for v in p]
        if len(p) != n:
            raise InputError("point/target dimension mismatch")
        if any(v < 0 for v in p):
            raise InputError("point exponents must be nonnegative")
        # a coordinate forced to zero excludes every point positive there
        if all(v == 0 or t > 0 for v, t in zip(p, tgt)):
            pts.append(p)
    if not pts:
        return False
    for p in pts:
        if all(v <= t for v, t in zip(p, tgt)):
            return True
    m = len(pts)
    ncols = m + n  # point weights then slacks; rhs rides at index ncols
    rows: list[list[int]] = []
    dens: list[int] = []
    basis: list[int] = []
    for j in range(n):
        vec = [pts[i][j] for i in range(m)] + [0] * n + [tgt[j]]
        vec[m + j] = 1
        rows.append(vec)
        dens.append(1)
        basis.append(m + j)
    # convexity row carries the artificial variable (kept implicit)
    rows.append([1] * m + [0] * n + [1])
    dens.append(1)
    basis.append(-1)
    zrow = n
    while True:
        if rows[zrow][ncols] == 0:
            return True
        enter = -1
        zvec = rows[zrow]
        for j in range(ncols):
            if zvec[j] > 0:
                enter = j
                break
        if enter < 0:
            return False
        # ratio test: min rhs/col over rows with positive column entry
        br = -1
        bn = bd = 0  # best ratio bn/bd
        for r in range(n + 1):
            cv = rows[r][enter]
            if cv > 0:
                rn, rd = rows[r][ncols], cv
                if br < 0 or rn * bd < bn * rd or (rn * bd == bn * rd and basis[r] < basis[br]):
                    br, bn, bd = r, rn, rd
        if br < 0:
            raise AssertionError("phase-1 objective is bounded; no pivot row found")
        if br == zrow:
            return True  # the artificial variable leaves the basis at value 0
        prow = rows[br]
        pv = prow[enter]
        for r in range(n + 1):
            if r == br:
                continue
            f = rows[r][enter]
            if f:
                rows[r] = [a * pv - f * b for a, b in zip(rows[r], prow)]
                rows[r], dens[r] = _row_reduce_gcd(rows[r], dens[r] * pv)
        rows[br], dens[br] = _row_reduce_gcd(prow, pv)
        basis[br] = enter
