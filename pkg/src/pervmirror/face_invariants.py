"""Lattice-point and area invariants of edges and 2-faces.

For a 2-face the counts are

* ``s0``: relative-interior lattice points,
* ``b``: boundary lattice points,
* ``s2``: normalized lattice area, i.e. the number of elementary triangles
  in any unimodular triangulation,
* ``s1 = s0 + s2 - 1``: interior edges of such a triangulation,
* ``vol2 = s2 / 2``: area measured in a saturated basis of the face lattice.

No triangulation is ever built: the counts do not depend on the choice.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import _kernels
from .errors import InternalInconsistency, UnsupportedFaceDimension
from .linalg import IntVector, gcd_content, hermite_basis
from .polytope import Face, LatticePolytope


@dataclass(frozen=True)
class FaceInvariants:
    face_id: int
    dim: int
    s0: int
    b: int
    s1: int
    s2: int
    len: int | None = None
    vol2: Fraction | None = None

    @property
    def pick_area(self) -> Fraction:
        """Pick's value ``s0 + b/2 - 1``; equals ``vol2`` on 2-faces."""
        return self.s0 + Fraction(self.b, 2) - 1


def lattice_points_of_face(P: LatticePolytope, F: Face) -> tuple[list[IntVector], list[IntVector]]:
    """All lattice points of an edge or 2-face, split into (interior, boundary).

    Enumerates the bounding box of the face in coordinates of a saturated
    basis of its affine lattice, keeping points that satisfy every facet
    inequality. A point is on the relative boundary iff it is also tight on a
    facet that does not contain ``F``.
    """
    if F.dim not in (1, 2):
        raise UnsupportedFaceDimension(f"lattice points only for edges and 2-faces, got dim {F.dim}")
    verts = P.face_points(F)
    origin = verts[0]
    basis = hermite_basis([tuple(a - b for a, b in zip(v, origin)) for v in verts[1:]])
    if len(basis) != F.dim:
        raise InternalInconsistency(f"face {F.id} spans dimension {len(basis)}, expected {F.dim}")
    coords = _lattice_coordinates(verts, origin, basis)
    ranges = [range(min(c), max(c) + 1) for c in zip(*coords)]
    box = [tuple(o + sum(t * b[k] for t, b in zip(ts, basis)) for k, o in enumerate(origin))
           for ts in product(*ranges)]
    normals = [nr for nr, _ in P.facets]
    levels = [lv for _, lv in P.facets]
    slacks = _kernels.facet_slacks(box, normals, levels)
    cutting = F.containing_facet_ids
    interior, boundary = [], []
    for p, row in zip(box, slacks):
        if any(s < 0 for s in row):
            continue
        if any(row[j] != 0 for j in cutting):
            raise InternalInconsistency(f"{p} left the affine hull of face {F.id}")
        if any(s == 0 for j, s in enumerate(row) if j not in cutting):
            boundary.append(p)
        else:
            interior.append(p)
    return interior, boundary


def edge_len(P: LatticePolytope, F: Face) -> int:
    """Lattice length of an edge: content of the endpoint difference."""
    if F.dim != 1:
        raise UnsupportedFaceDimension(f"edge_len needs an edge, got dim {F.dim}")
    a, b = P.face_points(F)
    return gcd_content(x - y for x, y in zip(a, b))


def _lattice_coordinates(points, origin: IntVector, basis) -> list[tuple[int, ...]]:
    """Integer coordinates of ``points - origin`` in a 1- or 2-row lattice basis."""
    d = len(origin)
    k = len(basis)
    if k == 1:
        (u,) = basis
        i = next(i for i in range(d) if u[i])
        cols, det = (i,), u[i]
    else:
        u, w = basis
        pairs = ((i, j) for i in range(d) for j in range(i + 1, d))
        cols, det = next(((i, j), u[i] * w[j] - u[j] * w[i]) for i, j in pairs
                         if u[i] * w[j] - u[j] * w[i])
    coords = []
    for p in points:
        x = [p[c] - origin[c] for c in cols]
        if k == 1:
            t, rem = divmod(x[0], det)
            ts, rems = (t,), (rem,)
        else:
            (i, j) = cols
            a, ra = divmod(x[0] * w[j] - x[1] * w[i], det)
            c, rc = divmod(u[i] * x[1] - u[j] * x[0], det)
            ts, rems = (a, c), (ra, rc)
        if any(rems) or any(p[m] - origin[m] != sum(t * b[m] for t, b in zip(ts, basis))
                            for m in range(d)):
            raise InternalInconsistency(f"{p} is not in the saturated lattice of its face")
        coords.append(ts)
    return coords


def _convex_order(pts: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Vertices in counter-clockwise order (Andrew's monotone chain, exact)."""
    pts = sorted(set(pts))

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def polygon_twice_area(poly: list[tuple[int, int]]) -> int:
    """Twice the signed shoelace area; positive for counter-clockwise order."""
    n = len(poly)
    return sum(poly[k][0] * poly[(k + 1) % n][1] - poly[(k + 1) % n][0] * poly[k][1]
               for k in range(n))


def face_area(P: LatticePolytope, F: Face) -> Fraction:
    """Area of a 2-face in coordinates of a saturated basis of its lattice plane."""
    if F.dim != 2:
        raise UnsupportedFaceDimension(f"face_area needs a 2-face, got dim {F.dim}")
    verts = P.face_points(F)
    origin = verts[0]
    basis = hermite_basis([tuple(a - b for a, b in zip(v, origin)) for v in verts[1:]])
    if len(basis) != 2:
        raise InternalInconsistency("2-face does not span a plane")
    coords = _lattice_coordinates(verts, origin, basis)
    return Fraction(abs(polygon_twice_area(_convex_order(coords))), 2)


def face_s_counts(P: LatticePolytope, F: Face) -> FaceInvariants:
    if F.dim != 2:
        raise UnsupportedFaceDimension(f"face_s_counts needs a 2-face, got dim {F.dim}")
    interior, boundary = lattice_points_of_face(P, F)
    vol2 = face_area(P, F)
    if (2 * vol2).denominator != 1:
        raise InternalInconsistency(f"normalized area {2 * vol2} of face {F.id} is not integral")
    s0, b, s2 = len(interior), len(boundary), int(2 * vol2)
    return FaceInvariants(face_id=F.id, dim=2, s0=s0, b=b, s1=s0 + s2 - 1, s2=s2, vol2=vol2)


def edge_invariants(P: LatticePolytope, F: Face) -> FaceInvariants:
    n = edge_len(P, F)
    # an edge of length n: n-1 interior points, n unit segments, 2 endpoints
    return FaceInvariants(face_id=F.id, dim=1, s0=n - 1, b=2, s1=n, s2=0, len=n)


def face_invariants(P: LatticePolytope, F: Face) -> FaceInvariants:
    if F.dim == 1:
        return edge_invariants(P, F)
    if F.dim == 2:
        return face_s_counts(P, F)
    raise UnsupportedFaceDimension(f"invariants only for edges and 2-faces, got dim {F.dim}")
