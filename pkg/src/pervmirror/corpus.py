"""Bundled test polytopes: the 16 reflexive polygons, their products, and three classics."""

from __future__ import annotations

from itertools import combinations_with_replacement, product
from math import gcd
from pathlib import Path

from .linalg import IntVector
from .polytope import LatticePolytope, from_vertices

# One representative per GL(2, Z) class, ordered by vertex count.
REFLEXIVE_POLYGONS: tuple[tuple[IntVector, ...], ...] = (
    ((-1, -1), (1, 0), (0, 1)),
    ((-1, -1), (1, 0), (-1, 1)),
    ((-2, -1), (1, -1), (0, 1)),
    ((-2, -1), (2, -1), (0, 1)),
    ((-2, -1), (1, -1), (1, 2)),
    ((-1, 0), (0, -1), (1, 0), (0, 1)),
    ((-1, -1), (1, 0), (0, 1), (-1, 0)),
    ((-1, -1), (1, -1), (0, 1), (-1, 0)),
    ((-1, -1), (1, -1), (1, 1), (-1, 0)),
    ((-1, -1), (1, -1), (1, 1), (-1, 1)),
    ((-2, -1), (1, -1), (1, 0), (0, 1)),
    ((-2, -1), (0, -1), (1, 0), (1, 2)),
    ((-1, -1), (0, -1), (1, 0), (0, 1), (-1, 0)),
    ((-1, -1), (1, -1), (1, 0), (0, 1), (-1, 0)),
    ((-1, -1), (1, -1), (1, 1), (0, 1), (-1, 0)),
    ((-1, -1), (0, -1), (1, 0), (1, 1), (0, 1), (-1, 0)),
)

QUINTIC_DUAL_VERTICES = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (-1, -1, -1, -1))


def polygon(k: int) -> LatticePolytope:
    """Reflexive polygon number ``k`` (1-based)."""
    return from_vertices(REFLEXIVE_POLYGONS[k - 1])


def product_vertices(A, B) -> list[IntVector]:
    return [tuple(a) + tuple(b) for a, b in product(A, B)]


def product_polytope(P: LatticePolytope, Q: LatticePolytope) -> LatticePolytope:
    return from_vertices(product_vertices(P.vertices, Q.vertices))


def quintic_dual() -> LatticePolytope:
    """conv{e1..e4, -e1-e2-e3-e4}: the fan polytope of P^4."""
    return from_vertices(QUINTIC_DUAL_VERTICES)


def quintic() -> LatticePolytope:
    """Newton polytope of the quintic threefold, obtained by dualizing ``quintic_dual``."""
    return quintic_dual().dual


def cube4() -> LatticePolytope:
    return from_vertices(product((-1, 1), repeat=4))


def cross4() -> LatticePolytope:
    verts = [tuple(s * int(i == j) for j in range(4)) for i in range(4) for s in (1, -1)]
    return from_vertices(verts)


def corpus_vertex_lists() -> dict[str, list[IntVector]]:
    """Name -> vertex list for every bundled 4-polytope, in a fixed order."""
    out: dict[str, list[IntVector]] = {
        "quintic": list(quintic().vertices),
        "cube4": sorted(product((-1, 1), repeat=4)),
        "cross4": list(cross4().vertices),
    }
    n = len(REFLEXIVE_POLYGONS)
    for i, j in combinations_with_replacement(range(1, n + 1), 2):
        out[f"poly{i:02d}x{j:02d}"] = product_vertices(REFLEXIVE_POLYGONS[i - 1],
                                                       REFLEXIVE_POLYGONS[j - 1])
    return out


def corpus() -> dict[str, LatticePolytope]:
    return {name: from_vertices(vs) for name, vs in corpus_vertex_lists().items()}


def write_corpus(directory: str | Path) -> list[Path]:
    from .io import format_polytope

    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name, verts in corpus_vertex_lists().items():
        path = directory / f"{name}.poly"
        path.write_text(format_polytope(verts, comment=name))
        written.append(path)
    return written


def polygon_normal_form(vertices) -> tuple[IntVector, ...]:
    """Canonical vertex tuple of a reflexive polygon under GL(2, Z).

    Every edge of a reflexive polygon sits at lattice distance one from the
    origin, so (primitive edge direction, edge start vertex) is a lattice
    basis. Mapping it to ((1, 0), (0, -1)) for every edge and orientation and
    taking the smallest sorted image gives an invariant.
    """
    from .face_invariants import _convex_order

    h = _convex_order([tuple(v) for v in vertices])
    best = None
    n = len(h)
    for i in range(n):
        for step in (1, -1):
            v, w = h[i], h[(i + step) % n]
            u = (w[0] - v[0], w[1] - v[1])
            g = gcd(*u)
            u = (u[0] // g, u[1] // g)
            det = -u[0] * v[1] + u[1] * v[0]
            if abs(det) != 1:
                raise ValueError("polygon is not reflexive")
            # inverse of the matrix with columns u and -v
            img = tuple(sorted((det * (-v[1] * x + v[0] * y), det * (-u[1] * x + u[0] * y))
                               for x, y in h))
            if best is None or img < best:
                best = img
    return best
