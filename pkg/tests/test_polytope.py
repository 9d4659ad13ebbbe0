import random
from itertools import product

import pytest

from pervmirror.errors import DimensionOutOfRange, NotFullDimensional, NotReflexive, OriginNotInterior
from pervmirror.polytope import (
    dual_face,
    face_lattice,
    from_vertices,
    is_reflexive,
    polar_dual,
    same_polytope,
)

from helpers import apply, random_unimodular


def test_simplex_from_vertices(quintic_dual):
    assert quintic_dual.n_vertices == 5
    assert len(quintic_dual.facets) == 5


def test_cube_facets(cube):
    assert sorted(cube.facets) == sorted(
        (tuple(s * int(i == j) for j in range(4)), -1) for i in range(4) for s in (1, -1))


def test_redundant_point_removed(cube):
    P = from_vertices(list(product((-1, 1), repeat=4)) + [(0, 0, 0, 0), (1, 0, 1, 1)])
    assert same_polytope(P, cube)
    assert (0, 0, 0, 0) not in P.vertices


def test_errors():
    with pytest.raises(NotFullDimensional):
        from_vertices([(0, 0, 0, 0), (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)])
    with pytest.raises(DimensionOutOfRange):
        from_vertices([(0,), (1,)])
    with pytest.raises(DimensionOutOfRange):
        from_vertices(list(product((0, 1), repeat=5)))
    with pytest.raises(NotFullDimensional):
        from_vertices([])


def test_polar_dual_of_cross_is_cube(cross, cube):
    assert same_polytope(polar_dual(cross), cube)


def test_polar_involution_quintic(quintic_dual):
    Q = polar_dual(quintic_dual)
    assert sorted(Q.vertices) == sorted(
        [(-1, -1, -1, -1)] + [tuple(4 if i == j else -1 for j in range(4)) for i in range(4)])
    assert same_polytope(polar_dual(from_vertices(Q.vertices)), quintic_dual)


def test_polar_dual_hull_agrees(full_corpus):
    # the index-preserving shortcut must match an independent hull computation
    for name in ("quintic", "poly05x12", "poly16x16"):
        P = full_corpus[name]
        D = polar_dual(P)
        H = from_vertices(D.vertices)
        assert sorted(H.facets) == sorted(D.facets)
        assert sorted(H.vertices) == sorted(D.vertices)


def test_reflexivity():
    assert is_reflexive(from_vertices(product((-1, 1), repeat=4)))
    cross2 = from_vertices([tuple(2 * s * int(i == j) for j in range(4)) for i in range(4) for s in (1, -1)])
    assert not is_reflexive(cross2)
    with pytest.raises(NotReflexive):
        polar_dual(cross2)
    off = from_vertices([(1, 1), (2, 1), (1, 2)])
    assert not is_reflexive(off)
    with pytest.raises(OriginNotInterior):
        polar_dual(off)


def test_quintic_reflexive(quintic_dual, quintic):
    assert is_reflexive(quintic_dual) and is_reflexive(quintic)


@pytest.mark.parametrize("name, fvec", [
    ("quintic", (5, 10, 10, 5)),
    ("cube4", (16, 32, 24, 8)),
    ("cross4", (8, 24, 32, 16)),
])
def test_f_vectors(full_corpus, name, fvec):
    assert full_corpus[name].f_vector() == fvec


def test_face_lattice_closed_under_intersection(cube):
    sets = {f.vertex_ids for f in face_lattice(cube)}
    for a in sets:
        for b in sets:
            c = a & b
            assert not c or c in sets


def test_dual_face_quintic_facet(quintic):
    for F in quintic.faces_of_dim(3):
        assert dual_face(quintic, F).dim == 0


def test_dual_face_quintic_edge(quintic, quintic_dual):
    a, b = (-1, -1, -1, -1), (4, -1, -1, -1)
    E = quintic.face_by_vertices([quintic.vertices.index(a), quintic.vertices.index(b)])
    G = dual_face(quintic, E)
    assert G.dim == 2
    assert {quintic.dual.vertices[i] for i in G.vertex_ids} == {(0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)}


def test_dual_face_cube_2faces(cube):
    duals = [dual_face(cube, F) for F in cube.faces_of_dim(2)]
    assert all(G.dim == 1 for G in duals)
    assert len({G.vertex_ids for G in duals}) == 24 == len(cube.dual.faces_of_dim(1))


def test_face_duality_properties(full_corpus):
    for name, P in full_corpus.items():
        faces = P.faces
        for F in faces:
            G = dual_face(P, F)
            assert F.dim + G.dim == 3, name
            assert dual_face(P.dual, G) == F, name
        for F in faces:
            for H in faces:
                if F.vertex_ids <= H.vertex_ids:
                    assert dual_face(P, H).vertex_ids <= dual_face(P, F).vertex_ids


def test_sphere_identity_and_incidence(full_corpus):
    for name, P in full_corpus.items():
        D = P.dual
        assert D.n_vertices - len(P.faces_of_dim(2)) == P.n_vertices - len(D.faces_of_dim(2)), name
        for Q in (P, D):
            fv = Q.f_vector()
            assert fv[0] - fv[1] + fv[2] - fv[3] == 0, name
            for i in range(Q.n_vertices):
                assert sum(i in fs for fs in Q.facet_vertices) >= 4
            assert all(len(fs) >= 4 for fs in Q.facet_vertices)


def test_reflexive_symmetric(full_corpus):
    for P in full_corpus.values():
        assert is_reflexive(P) and is_reflexive(polar_dual(P))
        assert same_polytope(polar_dual(polar_dual(P)), P)


def test_unimodular_image_same_combinatorics(cube):
    rnd = random.Random(3)
    A = random_unimodular(4, rnd)
    P = from_vertices([apply(A, v) for v in cube.vertices])
    assert P.f_vector() == cube.f_vector()
    assert is_reflexive(P)


def test_polygons_and_3d():
    hexagon = from_vertices([(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1), (0, 0)])
    assert hexagon.f_vector() == (6, 6)
    octa = from_vertices([(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)])
    assert octa.f_vector() == (6, 12, 8)
    assert same_polytope(octa.dual, from_vertices(product((-1, 1), repeat=3)))
