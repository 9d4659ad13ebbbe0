from itertools import product

import pytest

from pervmirror.errors import DimensionOutOfRange, NotReflexive, VerificationFailed
from pervmirror.mirror import (
    Check,
    curve_invariants,
    euler_batyrev,
    euler_perverse,
    hodge_diamond,
    mirror_data,
    verify_mirror_pair,
)
from pervmirror.polytope import from_vertices


def test_quintic_invariants(quintic):
    inv = curve_invariants(quintic)
    assert (inv.v, inv.e, inv.n, inv.g) == (5, 10, 50, 60)
    assert (inv.d, inv.e_tilde, inv.b1_gamma) == (300, 250, 6)
    assert inv.g == inv.d - inv.e_tilde + inv.e


def test_cube_invariants(cube):
    inv = curve_invariants(cube)
    assert (inv.v, inv.e, inv.n, inv.g) == (8, 24, 64, 24)


def test_quintic_sums_by_hand(quintic):
    # 10 two-faces of Xi: 5-dilated triangles over unit dual edges;
    # 10 two-faces of Xi^: elementary triangles over edges of length 5
    data = mirror_data(quintic)
    assert len(data.primal) == len(data.dual) == 10
    assert {(p.inv.s0, p.inv.s1, p.inv.s2, p.dual_len) for p in data.primal} == {(6, 30, 25, 1)}
    assert {(q.inv.s0, q.inv.s1, q.inv.s2, q.dual_len) for q in data.dual} == {(0, 0, 1, 5)}


@pytest.mark.parametrize("name, diamond", [
    ("quintic", (4, 104, 104, 4)),
    ("cube4", (7, 71, 71, 7)),
    ("cross4", (71, 7, 7, 71)),
])
def test_diamonds(full_corpus, name, diamond):
    assert hodge_diamond(full_corpus[name]).as_tuple() == diamond


def test_quintic_dual_diamond(quintic_dual):
    assert hodge_diamond(quintic_dual).as_tuple() == (104, 4, 4, 104)


@pytest.mark.parametrize("name, euler", [("quintic", -200), ("cube4", -128), ("cross4", 128)])
def test_euler(full_corpus, name, euler):
    P = full_corpus[name]
    assert euler_perverse(P) == euler_batyrev(P) == euler


def test_euler_antisymmetric(full_corpus):
    for P in full_corpus.values():
        assert euler_batyrev(P) == -euler_batyrev(P.dual)


def test_known_hypersurface_euler_numbers():
    # bidegree (3,3) in P2 x P2: h11 = 2, h21 = 83; anticanonical in P2 x P1 x P1: 3, 75
    big = [(-1, -1), (2, -1), (-1, 2)]
    sq = list(product((-1, 1), repeat=2))
    pp = from_vertices([a + b for a in big for b in big])
    assert euler_batyrev(pp) == euler_perverse(pp) == 2 * (2 - 83)
    pq = from_vertices([a + b for a in big for b in sq])
    assert euler_batyrev(pq) == 2 * (3 - 75)


def test_triangle_square_product(triangle_square):
    report = verify_mirror_pair(triangle_square)
    assert report.passed
    assert report.diamond.h10 == report.dual_diamond.h00


def test_verify_report(quintic):
    r = verify_mirror_pair(quintic)
    d = r.to_dict()
    assert d["diamond"] == [4, 104, 104, 4]
    assert d["dual_diamond"] == [104, 4, 4, 104]
    assert d["thm3_duality"] == "pass"
    assert set(d["checks"]) == {"thm1_euler", "thm2_closed_forms", "thm3_duality", "boundary_count",
                                "edge_incidence", "sphere_identity", "h10_correction"}
    assert d["checks"]["h10_correction"]["note"].endswith("= 105")


def test_verification_failure_is_raised(quintic, monkeypatch):
    import pervmirror.mirror as m

    real = m.Check

    def broken(name, passed, *a, **k):
        return real(name, passed and name != "boundary_count", *a, **k)

    monkeypatch.setattr(m, "Check", broken)
    with pytest.raises(VerificationFailed) as exc:
        verify_mirror_pair(quintic)
    assert exc.value.identity == "boundary_count"
    assert not verify_mirror_pair(quintic, raise_on_failure=False).passed
    assert Check is real


def test_errors():
    with pytest.raises(NotReflexive):
        curve_invariants(from_vertices([tuple(2 * s * int(i == j) for j in range(4))
                                        for i in range(4) for s in (1, -1)]))
    with pytest.raises(DimensionOutOfRange):
        curve_invariants(from_vertices(list(product((-1, 1), repeat=3))))


def test_all_invariants_nonnegative(full_corpus):
    for name, P in full_corpus.items():
        inv = curve_invariants(P)
        assert min(vars(inv).values()) >= 0, name
        assert inv.v >= 1 and inv.e >= 1
        h = hodge_diamond(P)
        assert h.h10 == inv.n + inv.d + inv.v - inv.e_tilde - 1
