"""Exact Hodge numbers of perverse curves in Batyrev mirror pairs.

Given a reflexive 4-polytope, compute the curve invariants, Hodge diamond and
Euler number of the perverse curve of the associated degeneration, and check
the mirror identities against the polar dual. Abstract normal-crossing curve
configurations are handled by :mod:`pervmirror.perverse_config`.
"""

__version__ = "0.1.0"

from .errors import (
    DimensionOutOfRange,
    InternalInconsistency,
    InvalidConfiguration,
    NotFullDimensional,
    NotReflexive,
    OriginNotInterior,
    ParseError,
    UnsupportedFaceDimension,
    VerificationFailed,
)
from .face_invariants import FaceInvariants, edge_len, face_s_counts, lattice_points_of_face
from .linalg import gcd_content, hermite_basis, rank_exact
from .mirror import (
    HodgeDiamond,
    PerverseCurveInvariants,
    curve_invariants,
    euler_batyrev,
    euler_perverse,
    hodge_diamond,
    verify_mirror_pair,
)
from .perverse_config import (
    CurveConfiguration,
    batyrev_consistency,
    config_euler,
    config_hodge,
    delta_matrix,
)
from .polytope import Face, LatticePolytope, dual_face, face_lattice, from_vertices, is_reflexive, polar_dual

__all__ = [
    "CurveConfiguration", "DimensionOutOfRange", "Face", "FaceInvariants", "HodgeDiamond",
    "InternalInconsistency", "InvalidConfiguration", "LatticePolytope", "NotFullDimensional",
    "NotReflexive", "OriginNotInterior", "ParseError", "PerverseCurveInvariants",
    "UnsupportedFaceDimension", "VerificationFailed", "batyrev_consistency", "config_euler",
    "config_hodge", "curve_invariants", "delta_matrix", "dual_face", "edge_len", "euler_batyrev",
    "euler_perverse", "face_lattice", "face_s_counts", "from_vertices", "gcd_content",
    "hermite_basis", "hodge_diamond", "is_reflexive", "lattice_points_of_face", "polar_dual",
    "rank_exact", "verify_mirror_pair",
]
