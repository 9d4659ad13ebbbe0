"""Lattice polytopes: hull, face lattice, polar duality and face duality.

A polytope is stored by its vertices (V-representation) and its facet
inequalities ``<normal, x> >= level`` with primitive normals
(H-representation). Faces are vertex-index sets; the face lattice is the
intersection-closure of the facet vertex sets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from . import _kernels
from .errors import (
    DimensionOutOfRange,
    InternalInconsistency,
    NotFullDimensional,
    NotReflexive,
    OriginNotInterior,
)
from .linalg import IntVector, rank_exact

SUPPORTED_DIMS = (2, 3, 4)


@dataclass(frozen=True)
class Face:
    id: int
    dim: int
    vertex_ids: frozenset[int]
    containing_facet_ids: frozenset[int]

    def __le__(self, other: "Face") -> bool:
        return self.vertex_ids <= other.vertex_ids


@dataclass(frozen=True, eq=False)
class LatticePolytope:
    """Full-dimensional lattice polytope with exact V- and H-representations.

    Build instances with :func:`from_vertices` or :func:`polar_dual`; the
    constructor trusts its arguments.
    """

    dim: int
    vertices: tuple[IntVector, ...]
    facets: tuple[tuple[IntVector, int], ...]
    # facet_vertices[j] = indices of vertices tight on facet j
    facet_vertices: tuple[frozenset[int], ...] = field(repr=False)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LatticePolytope):
            return NotImplemented
        return self.dim == other.dim and self.vertex_set == other.vertex_set

    def __hash__(self) -> int:
        return hash((self.dim, self.vertex_set))

    @property
    def vertex_set(self) -> frozenset[IntVector]:
        return frozenset(self.vertices)

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        return tuple(_build_face_lattice(self))

    @cached_property
    def _face_index(self) -> dict[frozenset[int], Face]:
        return {f.vertex_ids: f for f in self.faces}

    def faces_of_dim(self, k: int) -> list[Face]:
        return [f for f in self.faces if f.dim == k]

    def face_by_vertices(self, vertex_ids: Iterable[int]) -> Face:
        return self._face_index[frozenset(vertex_ids)]

    def f_vector(self) -> tuple[int, ...]:
        counts = [0] * self.dim
        for f in self.faces:
            counts[f.dim] += 1
        return tuple(counts)

    @cached_property
    def dual(self) -> "LatticePolytope":
        return polar_dual(self)

    def face_points(self, face: Face) -> list[IntVector]:
        return [self.vertices[i] for i in sorted(face.vertex_ids)]

    def __repr__(self) -> str:
        return (f"LatticePolytope(dim={self.dim}, n_vertices={len(self.vertices)}, "
                f"n_facets={len(self.facets)})")


def _check_dim(d: int) -> None:
    if d not in SUPPORTED_DIMS:
        raise DimensionOutOfRange(f"ambient dimension {d} not in {SUPPORTED_DIMS}")


def affine_rank(points: Sequence[Sequence[int]]) -> int:
    if not points:
        return -1
    p0 = points[0]
    return rank_exact([[a - b for a, b in zip(p, p0)] for p in points[1:]])


def from_vertices(points: Iterable[Sequence[int]]) -> LatticePolytope:
    """Convex hull of integer points, with the exact vertex set and facet list."""
    pts = sorted({tuple(int(x) for x in p) for p in points})
    if not pts:
        raise NotFullDimensional("empty point set")
    d = len(pts[0])
    if any(len(p) != d for p in pts):
        raise ValueError("points of mixed dimension")
    _check_dim(d)
    if affine_rank(pts) < d:
        raise NotFullDimensional(f"affine span of the points has dimension < {d}")

    facets = _kernels.supporting_hyperplanes(pts)
    normals = [nr for nr, _ in facets]
    levels = [lv for _, lv in facets]
    slacks = _kernels.facet_slacks(pts, normals, levels)

    # a point is a vertex iff the normals of the facets through it have rank d
    vertices = []
    for p, row in zip(pts, slacks):
        tight = [normals[j] for j, s in enumerate(row) if s == 0]
        if len(tight) >= d and rank_exact(tight) == d:
            vertices.append(p)
    vidx = [pts.index(v) for v in vertices]
    facet_vertices = tuple(
        frozenset(k for k, i in enumerate(vidx) if slacks[i][j] == 0)
        for j in range(len(facets)))
    return LatticePolytope(d, tuple(vertices), tuple(facets), facet_vertices)


def origin_interior(P: LatticePolytope) -> bool:
    # <n, 0> = 0 > level for every facet
    return all(level < 0 for _, level in P.facets)


def is_reflexive(P: LatticePolytope) -> bool:
    """Origin strictly interior and every primitive facet normal at level -1."""
    return all(level == -1 for _, level in P.facets)


def polar_dual(P: LatticePolytope) -> LatticePolytope:
    """Polar dual ``{v : <v, x> >= -1 for all x in P}`` of a reflexive polytope.

    Vertex ``j`` of the result is the normal of facet ``j`` of ``P``, and facet
    ``i`` of the result is ``<w_i, v> >= -1`` for vertex ``w_i`` of ``P``. This
    index correspondence is what makes :func:`dual_face` a pure relabelling.
    """
    if not origin_interior(P):
        raise OriginNotInterior("origin is not strictly interior to the polytope")
    if not is_reflexive(P):
        bad = next(nr for nr, lv in P.facets if lv != -1)
        raise NotReflexive(f"facet normal {bad} is not at lattice distance 1; "
                           "the polar dual has non-integral vertices")
    vertices = tuple(nr for nr, _ in P.facets)
    facets = tuple((w, -1) for w in P.vertices)
    facet_vertices = tuple(
        frozenset(j for j, fv in enumerate(P.facet_vertices) if i in fv)
        for i in range(len(P.vertices)))
    Q = LatticePolytope(P.dim, vertices, facets, facet_vertices)
    # polar_dual(Q) must give P back with the same indexing
    Q.__dict__["dual"] = P
    return Q


def _build_face_lattice(P: LatticePolytope) -> list[Face]:
    fsets = list(P.facet_vertices)
    seen: set[frozenset[int]] = set(fsets)
    frontier = list(seen)
    while frontier:
        nxt = []
        for f in frontier:
            for h in fsets:
                g = f & h
                if g and g not in seen:
                    seen.add(g)
                    nxt.append(g)
        frontier = nxt
    # vertices are faces too, but a vertex is always an intersection of facets
    faces = []
    for vs in seen:
        containing = frozenset(j for j, h in enumerate(fsets) if vs <= h)
        dim = affine_rank([P.vertices[i] for i in sorted(vs)])
        if dim >= P.dim:
            raise InternalInconsistency("proper face of full dimension")
        faces.append((dim, tuple(sorted(vs)), containing))
    faces.sort()
    return [Face(k, dim, frozenset(vs), c) for k, (dim, vs, c) in enumerate(faces)]


def face_lattice(P: LatticePolytope) -> list[Face]:
    """All proper faces of ``P``, ordered by (dimension, sorted vertex ids)."""
    return list(P.faces)


def dual_face(P: LatticePolytope, F: Face) -> Face:
    """The face of ``polar_dual(P)`` spanned by the normals of facets containing ``F``."""
    if not is_reflexive(P):
        raise NotReflexive("face duality needs a reflexive polytope")
    return P.dual.face_by_vertices(F.containing_facet_ids)


def same_polytope(P: LatticePolytope, Q: LatticePolytope) -> bool:
    return P.dim == Q.dim and P.vertex_set == Q.vertex_set
