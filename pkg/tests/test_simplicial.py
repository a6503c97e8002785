"""Simplicial complexes, reduced homology, and the Stanley-Reisner dictionary."""

from __future__ import annotations

import random
from itertools import combinations

import pytest

from idealworks.errors import InputError
from idealworks.fields import GF2, GF3, QQ, FieldSpec
from idealworks.homology import clear_caches
from idealworks.monomials import MonomialIdeal
from idealworks.simplicial import (SimplicialComplex, cone_acyclicity_check,
                                   sr_complex, sr_ideal)

# 6-vertex triangulation of the real projective plane: 10 triangles, the
# classical minimal example whose homology sees 2-torsion.
RP2_FACETS = [
    (1, 2, 3), (1, 2, 4), (1, 3, 5), (1, 4, 6), (1, 5, 6),
    (2, 3, 6), (2, 4, 5), (2, 5, 6), (3, 4, 5), (3, 4, 6),
]


def random_complex(rng, n, k=3):
    faces = [tuple(sorted(rng.sample(range(1, n + 1),
                                     rng.randrange(1, min(k, n) + 1))))
             for _ in range(rng.randrange(1, 6))]
    return SimplicialComplex.from_facets(n, faces)


def test_states_and_special_complexes():
    void = SimplicialComplex.void(3)
    empty = SimplicialComplex.empty(3)
    full = SimplicialComplex.full_simplex(3)
    assert void.state == "void" and void.dim is None
    assert empty.state == "empty" and empty.dim == -1
    assert full.dim == 2 and full.has_face((1, 2, 3))
    assert void.reduced_homology_dims(QQ) == {}
    assert empty.reduced_homology_dims(QQ) == {-1: 1}
    assert all(h == 0 for h in full.reduced_homology_dims(QQ).values())


def test_from_facets_maximalizes():
    cx = SimplicialComplex.from_facets(4, [(1,), (1, 2), (2, 1), (3,)])
    assert cx.facets == ((1, 2), (3,))
    assert cx.has_face(())
    assert cx.has_face((2,))
    assert not cx.has_face((1, 3))


def test_json_round_trip_and_errors():
    for cx in (SimplicialComplex.void(2), SimplicialComplex.empty(2),
               SimplicialComplex.from_facets(3, [(1, 2), (3,)])):
        assert SimplicialComplex.from_json(cx.to_json()) == cx
    with pytest.raises(InputError):
        SimplicialComplex.from_json({"n": 2, "facets": [[1, 5]], "state": "facets"})
    with pytest.raises(InputError):
        SimplicialComplex.from_json({"n": 2, "facets": []})


def test_face_enumeration_matches_subset_closure():
    rng = random.Random(3)
    for _ in range(20):
        cx = random_complex(rng, rng.randrange(1, 7))
        faces = set(cx.faces())
        expected = set()
        for facet in cx.facets:
            for k in range(len(facet) + 1):
                expected.update(combinations(facet, k))
        assert faces == expected
        # f-vector indexed from the empty face: counts[k] = #faces of size k
        counts = cx.face_counts()
        for k in range(len(counts)):
            assert counts[k] == sum(1 for f in faces if len(f) == k)


def test_hollow_triangle_and_sphere_homology():
    hollow = SimplicialComplex.from_facets(3, [(1, 2), (2, 3), (1, 3)])
    for field in (QQ, GF2, GF3):
        assert hollow.reduced_homology_dims(field) == {-1: 0, 0: 0, 1: 1}
    sphere = SimplicialComplex.from_facets(
        4, list(combinations(range(1, 5), 3)))
    for field in (QQ, GF2):
        dims = sphere.reduced_homology_dims(field)
        assert dims == {-1: 0, 0: 0, 1: 0, 2: 1}


def test_projective_plane_homology_depends_on_field():
    cx = SimplicialComplex.from_facets(6, RP2_FACETS)
    assert cx.reduced_homology_dims(GF2) == {-1: 0, 0: 0, 1: 1, 2: 1}
    assert cx.reduced_homology_dims(QQ) == {-1: 0, 0: 0, 1: 0, 2: 0}
    assert cx.reduced_homology_dims(GF3) == {-1: 0, 0: 0, 1: 0, 2: 0}
    assert cx.reduced_homology_dims(FieldSpec(5)) == {-1: 0, 0: 0, 1: 0, 2: 0}


def test_disjoint_points_and_circle_union():
    points = SimplicialComplex.from_facets(4, [(1,), (2,), (3,), (4,)])
    assert points.reduced_homology_dims(QQ) == {-1: 0, 0: 3}
    two_circles = SimplicialComplex.from_facets(
        6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)])
    dims = two_circles.reduced_homology_dims(GF2)
    assert dims == {-1: 0, 0: 1, 1: 2}


def test_link_against_brute_force():
    rng = random.Random(17)
    for _ in range(25):
        cx = random_complex(rng, rng.randrange(2, 7))
        all_faces = set(cx.faces())
        face = rng.choice(sorted(all_faces))
        lk = cx.link(face)
        expected = {tuple(sorted(g)) for g in all_faces
                    if not set(g) & set(face)
                    and tuple(sorted(set(g) | set(face))) in all_faces}
        assert set(lk.faces()) == expected
    with pytest.raises(InputError):
        SimplicialComplex.from_facets(3, [(1, 2)]).link((3,))


def test_link_preserves_homology_route_consistency():
    # links computed on a complex carrying a non-face cache must agree with
    # the same links computed from a bare facet list
    ideal = MonomialIdeal.from_gens(5, [(1, 1, 0, 0, 0), (0, 1, 1, 0, 0),
                                        (0, 0, 1, 1, 0), (1, 0, 0, 1, 1)])
    cached = sr_complex(ideal)
    bare = SimplicialComplex.from_facets(cached.n, cached.facets)
    for field in (QQ, GF2):
        assert cached.reduced_homology_dims(field) == bare.reduced_homology_dims(field)
        for face in [(), (1,), (2,)]:
            if cached.has_face(face):
                assert (cached.link(face).reduced_homology_dims(field)
                        == bare.link(face).reduced_homology_dims(field))


def test_cone_is_acyclic():
    rng = random.Random(29)
    for trial in range(30):
        n = rng.randrange(1, 6)
        base = random_complex(rng, n)
        apex = n + 1
        cone_facets = [f + (apex,) for f in base.facets] or [(apex,)]
        cone = SimplicialComplex.from_facets(n + 1, cone_facets)
        assert cone.is_cone(apex)
        field = (QQ, GF2, GF3)[trial % 3]
        assert cone_acyclicity_check(cone, apex, field)
        assert all(h == 0 for h in cone.reduced_homology_dims(field).values())


def test_euler_characteristic_consistency():
    rng = random.Random(37)
    for _ in range(30):
        cx = random_complex(rng, rng.randrange(1, 7))
        for field in (QQ, GF2):
            dims = cx.reduced_homology_dims(field)
            counts = cx.face_counts()
            # reduced Euler characteristic two ways: faces vs homology
            euler_faces = sum((-1) ** (k - 1) * counts[k]
                              for k in range(len(counts)))
            euler_hom = sum((-1) ** d * h for d, h in dims.items())
            assert euler_faces == euler_hom


def test_sr_dictionary_round_trips():
    rng = random.Random(53)
    for _ in range(40):
        n = rng.randrange(1, 7)
        gens = [tuple(rng.randrange(0, 2) for _ in range(n))
                for _ in range(rng.randrange(0, 6))]
        gens = [g for g in gens if any(g)]
        ideal = MonomialIdeal.from_gens(n, gens) if gens else MonomialIdeal.zero(n)
        cx = sr_complex(ideal)
        assert sr_ideal(cx) == ideal
    for _ in range(25):
        cx = random_complex(rng, rng.randrange(1, 7))
        assert sr_complex(sr_ideal(cx)) == cx


def test_sr_complex_faces_avoid_generators():
    ideal = MonomialIdeal.from_gens(4, [(1, 1, 0, 0), (0, 0, 1, 1)])
    cx = sr_complex(ideal)
    for face in cx.faces():
        vec = tuple(1 if v in face else 0 for v in range(1, 5))
        assert not ideal.contains(vec)
    assert sr_complex(MonomialIdeal.unit(3)).is_void
    assert sr_complex(MonomialIdeal.zero(3)) == SimplicialComplex.full_simplex(3)
    with pytest.raises(InputError):
        sr_complex(MonomialIdeal.from_gens(2, [(2, 0)]))
    with pytest.raises(InputError):
        sr_ideal(SimplicialComplex.void(2))
    assert sr_ideal(SimplicialComplex.empty(2)) == MonomialIdeal.from_gens(
        2, [(1, 0), (0, 1)])


def test_homology_cache_is_transparent():
    clear_caches()
    cx = SimplicialComplex.from_facets(6, RP2_FACETS)
    first = cx.reduced_homology_dims(GF2)
    again = SimplicialComplex.from_facets(6, RP2_FACETS).reduced_homology_dims(GF2)
    assert first == again
