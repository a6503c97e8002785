"""Exact rank and LP feasibility against independent oracles."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from idealworks.errors import InputError
from idealworks.fields import GF2, GF3, QQ, FieldSpec
from idealworks.linalg import ExactMatrix, lp_feasible_convex_cover, rank, rank_rows


def oracle_rank(rows, field):
    """Dense Gaussian elimination with Fractions (or ints mod p), no pivoting tricks."""
    if field.is_rational:
        mat = [[Fraction(v) for v in r] for r in rows]
    else:
        p = field.char
        mat = [[int(Fraction(v).numerator * pow(Fraction(v).denominator, -1, p)) % p
                for v in r] for r in rows]
    r = 0
    cols = len(mat[0]) if mat else 0
    for c in range(cols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        if field.is_rational:
            inv = 1 / mat[r][c]
        else:
            inv = pow(mat[r][c], -1, field.char)
        mat[r] = [v * inv if field.is_rational else v * inv % field.char for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                factor = mat[i][c]
                if field.is_rational:
                    mat[i] = [a - factor * b for a, b in zip(mat[i], mat[r])]
                else:
                    mat[i] = [(a - factor * b) % field.char for a, b in zip(mat[i], mat[r])]
        r += 1
    return r


def test_rank_hand_examples():
    assert rank([[1, 2], [2, 4]], QQ) == 1
    assert rank([[1, 2], [2, 5]], QQ) == 2
    assert rank([], QQ) == 0
    assert rank([[0, 0, 0]], QQ) == 0
    assert rank([[Fraction(1, 2), Fraction(1, 3)], [3, 2]], QQ) == 1


def test_rank_depends_on_characteristic():
    rows = [[1, 1], [1, -1]]
    assert rank(rows, QQ) == 2
    assert rank(rows, GF2) == 1
    assert rank(rows, GF3) == 2
    assert rank([[2, 4], [1, 2]], GF3) == 1
    assert rank([[5]], FieldSpec(5)) == 0


def test_rank_sparse_rows_entry_point():
    assert rank_rows([{0: 1, 3: 2}, {0: 2, 3: 4}, {1: 1}], QQ) == 2
    assert rank_rows([{0: 3}, {0: 6}], GF3) == 0


def test_rank_rejects_entries_without_image():
    with pytest.raises(InputError):
        rank([[Fraction(1, 2)]], GF2)


def test_rank_random_against_oracle():
    rng = random.Random(20260813)
    fields = [QQ, GF2, GF3, FieldSpec(5)]
    for trial in range(300):
        nr = rng.randrange(0, 6)
        nc = rng.randrange(1, 6)
        rows = [[rng.randrange(-4, 5) for _ in range(nc)] for _ in range(nr)]
        field = fields[trial % len(fields)]
        assert rank(rows, field) == oracle_rank(rows, field)


def test_rank_transpose_and_field_properties():
    rng = random.Random(7)
    for _ in range(100):
        nr, nc = rng.randrange(1, 6), rng.randrange(1, 6)
        rows = [[rng.randrange(-3, 4) for _ in range(nc)] for _ in range(nr)]
        mat = ExactMatrix.from_rows(rows, QQ)
        assert rank(mat, QQ) == rank(mat.transpose(), QQ)
        for field in (GF2, GF3):
            assert rank(rows, field) <= rank(rows, QQ)


def oracle_lp(points, target):
    """Fourier-Motzkin elimination over Fractions for the same feasibility question."""
    m, n = len(points), len(target)
    rows = []
    for i in range(m):
        coeff = [Fraction(0)] * m
        coeff[i] = Fraction(-1)
        rows.append((coeff, Fraction(0)))
    rows.append(([Fraction(1)] * m, Fraction(1)))
    rows.append(([Fraction(-1)] * m, Fraction(-1)))
    for j in range(n):
        rows.append(([Fraction(p[j]) for p in points], Fraction(target[j])))
    for var in range(m):
        pos = [r for r in rows if r[0][var] > 0]
        neg = [r for r in rows if r[0][var] < 0]
        rows = [r for r in rows if r[0][var] == 0]
        for cp, bp in pos:
            for cn, bn in neg:
                lam, mu = -cn[var], cp[var]
                rows.append(([lam * a + mu * b for a, b in zip(cp, cn)],
                             lam * bp + mu * bn))
    return all(b >= 0 for _, b in rows)


def test_lp_hand_examples():
    assert lp_feasible_convex_cover([(2, 0), (0, 2)], (1, 1))
    assert not lp_feasible_convex_cover([(2, 0), (0, 2)], (0, 0))
    assert lp_feasible_convex_cover([(3,)], (3,))
    assert lp_feasible_convex_cover([(3,)], (4,))
    assert not lp_feasible_convex_cover([(3,)], (2,))


def test_lp_random_against_fourier_motzkin():
    rng = random.Random(414213)
    agree = 0
    for _ in range(400):
        m = rng.randrange(1, 5)
        n = rng.randrange(1, 4)
        points = [tuple(rng.randrange(0, 5) for _ in range(n)) for _ in range(m)]
        target = tuple(rng.randrange(0, 5) for _ in range(n))
        expected = oracle_lp(points, target)
        assert lp_feasible_convex_cover(points, target) == expected
        agree += 1
    assert agree == 400


def test_lp_exactness_on_tight_fractions():
    # (1,3) and (3,1) average to (2,2); anything below in one coordinate
    # without slack in the other must be infeasible.
    assert lp_feasible_convex_cover([(1, 3), (3, 1)], (2, 2))
    assert not lp_feasible_convex_cover([(1, 3), (3, 1)], (2, 1))
    # thirds: 2/3 * (3,0) + 1/3 * (0,3) = (2,1)
    assert lp_feasible_convex_cover([(3, 0), (0, 3)], (2, 1))
    assert not lp_feasible_convex_cover([(4, 0), (0, 3)], (2, 1))


def test_lp_monotone_in_target():
    rng = random.Random(5)
    for _ in range(100):
        m = rng.randrange(1, 4)
        n = rng.randrange(1, 4)
        points = [tuple(rng.randrange(0, 4) for _ in range(n)) for _ in range(m)]
        target = tuple(rng.randrange(0, 4) for _ in range(n))
        if lp_feasible_convex_cover(points, target):
            bigger = tuple(t + rng.randrange(0, 2) for t in target)
            assert lp_feasible_convex_cover(points, bigger)


def test_lp_edge_inputs():
    # no points means no convex combination at all
    assert not lp_feasible_convex_cover([], (1, 2))
    with pytest.raises(InputError):
        lp_feasible_convex_cover([(1, 2), (1,)], (1, 2))
    with pytest.raises(InputError):
        lp_feasible_convex_cover([(1, 2)], (-1, 2))
