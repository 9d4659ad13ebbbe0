import random
from fractions import Fraction
from itertools import product

import pytest

from pervmirror.errors import UnsupportedFaceDimension
from pervmirror.face_invariants import (
    edge_invariants,
    edge_len,
    face_area,
    face_s_counts,
    lattice_points_of_face,
)
from pervmirror.polytope import from_vertices

from helpers import apply, random_unimodular


def brute_points(P, F):
    """Lattice points of a face, found by testing every point of a wide box."""
    verts = P.face_points(F)
    lo = min(min(v) for v in verts) - 1
    hi = max(max(v) for v in verts) + 1
    others = [P.facets[j] for j in range(len(P.facets)) if j not in F.containing_facet_ids]
    cut = [P.facets[j] for j in F.containing_facet_ids]
    inner, bdry = 0, 0
    for p in product(range(lo, hi + 1), repeat=P.dim):
        vals = [sum(a * b for a, b in zip(n, p)) - lv for n, lv in P.facets]
        if min(vals) < 0 or any(sum(a * b for a, b in zip(n, p)) != lv for n, lv in cut):
            continue
        if any(sum(a * b for a, b in zip(n, p)) == lv for n, lv in others):
            bdry += 1
        else:
            inner += 1
    return inner, bdry


def test_quintic_2face_points(quintic):
    for F in quintic.faces_of_dim(2):
        interior, boundary = lattice_points_of_face(quintic, F)
        assert (len(interior), len(boundary)) == (6, 15)
        assert (len(interior), len(boundary)) == brute_points(quintic, F)


def test_quintic_edge(quintic):
    a, b = (-1, -1, -1, -1), (4, -1, -1, -1)
    E = quintic.face_by_vertices([quintic.vertices.index(a), quintic.vertices.index(b)])
    interior, boundary = lattice_points_of_face(quintic, E)
    assert len(interior) == 4 and len(interior) + len(boundary) == 6
    assert edge_len(quintic, E) == 5


def test_elementary_triangle(cross):
    F = cross.faces_of_dim(2)[0]
    interior, boundary = lattice_points_of_face(cross, F)
    assert (len(interior), len(boundary)) == (0, 3)


@pytest.mark.parametrize("name, length", [("quintic", 5), ("cross4", 1), ("cube4", 2)])
def test_edge_len(full_corpus, name, length):
    P = full_corpus[name]
    assert {edge_len(P, E) for E in P.faces_of_dim(1)} == {length}


@pytest.mark.parametrize("name, expected", [
    ("quintic", (6, 30, 25, 15, Fraction(25, 2))),
    ("cube4", (1, 8, 8, 8, Fraction(4))),
    ("cross4", (0, 0, 1, 3, Fraction(1, 2))),
])
def test_face_s_counts(full_corpus, name, expected):
    P = full_corpus[name]
    for F in P.faces_of_dim(2):
        inv = face_s_counts(P, F)
        assert (inv.s0, inv.s1, inv.s2, inv.b, inv.vol2) == expected


def test_wrong_dimensions(cube):
    with pytest.raises(UnsupportedFaceDimension):
        lattice_points_of_face(cube, cube.faces_of_dim(0)[0])
    with pytest.raises(UnsupportedFaceDimension):
        lattice_points_of_face(cube, cube.faces_of_dim(3)[0])
    with pytest.raises(UnsupportedFaceDimension):
        edge_len(cube, cube.faces_of_dim(2)[0])
    with pytest.raises(UnsupportedFaceDimension):
        face_s_counts(cube, cube.faces_of_dim(1)[0])


def test_euler_and_pick_on_every_corpus_2face(full_corpus):
    for name, P in full_corpus.items():
        for Q in (P, P.dual):
            for F in Q.faces_of_dim(2):
                inv = face_s_counts(Q, F)
                assert inv.s0 - inv.s1 + inv.s2 == 1, name
                assert inv.s2 == 2 * inv.s0 + inv.b - 2, name
                assert inv.vol2 == inv.pick_area, name
            for E in Q.faces_of_dim(1):
                interior, boundary = lattice_points_of_face(Q, E)
                inv = edge_invariants(Q, E)
                assert len(interior) == inv.s0 == inv.len - 1
                assert len(boundary) == 2


def test_brute_force_matches_on_products(full_corpus):
    P = full_corpus["poly05x12"]
    for F in P.faces_of_dim(2):
        interior, boundary = lattice_points_of_face(P, F)
        assert (len(interior), len(boundary)) == brute_points(P, F)


def test_unimodular_invariance(full_corpus):
    rnd = random.Random(2024)
    names = sorted(full_corpus)
    for trial in range(100):
        P = full_corpus[rnd.choice(names)]
        A = random_unimodular(4, rnd, steps=6)
        image = [apply(A, v) for v in P.vertices]
        Q = from_vertices(image)
        index = {v: k for k, v in enumerate(Q.vertices)}
        vmap = [index[w] for w in image]
        assert Q.f_vector() == P.f_vector()
        for F in P.faces_of_dim(2) + P.faces_of_dim(1):
            G = Q.face_by_vertices(vmap[i] for i in F.vertex_ids)
            a = [len(x) for x in lattice_points_of_face(P, F)]
            b = [len(x) for x in lattice_points_of_face(Q, G)]
            assert a == b
            if F.dim == 1:
                assert edge_len(P, F) == edge_len(Q, G)
            else:
                assert face_area(P, F) == face_area(Q, G)


def test_translation_invariance_of_edge_len():
    P = from_vertices([(0, 0, 0), (6, 0, 0), (0, 4, 0), (0, 0, 3)])
    Q = from_vertices([(x + 5, y - 7, z + 1) for x, y, z in P.vertices])
    assert sorted(edge_len(P, E) for E in P.faces_of_dim(1)) == \
        sorted(edge_len(Q, E) for E in Q.faces_of_dim(1))
    assert sorted(edge_len(P, E) for E in P.faces_of_dim(1)) == [1, 2, 3, 3, 4, 6]


def test_non_reflexive_3d_face_area():
    # face x+y+z = 6 of a dilated simplex: 7-triangle, normalized area 36
    P = from_vertices([(0, 0, 0), (6, 0, 0), (0, 6, 0), (0, 0, 6)])
    F = next(F for F in P.faces_of_dim(2) if len(F.vertex_ids & {0}) == 0
             and all(sum(P.vertices[i]) == 6 for i in F.vertex_ids))
    inv = face_s_counts(P, F)
    assert inv.s2 == 36 and inv.b == 18 and inv.s0 == 10
