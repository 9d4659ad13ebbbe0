"""Cohomology of a perverse curve from an abstract normal-crossing configuration.

The configuration lists the surface components ``D_1..D_N`` only by count,
the curve components ``Z_i = D_a cap D_b`` by their ambient pair ``(a, b)``
and genus, and the triple points by the three curve components meeting
there. Everything follows from the rank ``r`` of the alternating restriction
map ``delta: H^0(D^2) -> H^0(D^3)``:

    h00 = h11 = M - r          (ker delta, coker delta*)
    h10 = h01 = g + (n - r)    (coker delta / ker delta* plus the genus part)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Mapping, Sequence

from .errors import InternalInconsistency, InvalidConfiguration
from .linalg import IntMatrix, rank_exact, transpose
from .mirror import HodgeDiamond, PerverseCurveInvariants, diamond_from_invariants


@dataclass(frozen=True)
class CurveComponent:
    id: Any
    pair: tuple[int, int]
    genus: int


@dataclass(frozen=True)
class TriplePoint:
    components: tuple[Any, Any, Any]


@dataclass(frozen=True)
class CurveConfiguration:
    ambient_count: int
    components: tuple[CurveComponent, ...]
    triple_points: tuple[TriplePoint, ...] = ()
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        object.__setattr__(self, "triple_points", tuple(self.triple_points))
        validate(self)
        object.__setattr__(self, "_index", {c.id: k for k, c in enumerate(self.components)})

    @classmethod
    def from_dict(cls, data: Mapping) -> "CurveConfiguration":
        try:
            comps = tuple(
                CurveComponent(c["id"], tuple(int(x) for x in c["pair"]), int(c.get("genus", 0)))
                for c in data["components"])
            tps = tuple(TriplePoint(tuple(t["components"])) for t in data.get("triple_points", ()))
            return cls(int(data["ambient_count"]), comps, tps)
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidConfiguration(f"malformed configuration: {exc!r}") from exc

    def to_dict(self) -> dict:
        return {
            "ambient_count": self.ambient_count,
            "components": [{"id": c.id, "pair": list(c.pair), "genus": c.genus}
                           for c in self.components],
            "triple_points": [{"components": list(t.components)} for t in self.triple_points],
        }

    @property
    def genus_sum(self) -> int:
        return sum(c.genus for c in self.components)

    def column(self, component_id) -> int:
        return self._index[component_id]


def _hashable(x) -> bool:
    try:
        hash(x)
    except TypeError:
        return False
    return True


def validate(cfg: CurveConfiguration) -> None:
    N = cfg.ambient_count
    if not cfg.components:
        raise InvalidConfiguration("configuration has no components")
    ids = [c.id for c in cfg.components]
    if not all(_hashable(i) for i in ids) or len(set(ids)) != len(ids):
        raise InvalidConfiguration("component ids must be unique")
    pairs = {}
    for c in cfg.components:
        if len(c.pair) != 2:
            raise InvalidConfiguration(f"component {c.id!r}: pair must have two entries")
        a, b = c.pair
        if not 1 <= a < b <= N:
            raise InvalidConfiguration(f"component {c.id!r}: pair {c.pair} not 1 <= i < j <= {N}")
        if c.genus < 0:
            raise InvalidConfiguration(f"component {c.id!r}: negative genus")
        pairs[c.id] = (a, b)
    for k, t in enumerate(cfg.triple_points):
        ts = t.components
        if len(ts) != 3 or not all(_hashable(x) for x in ts) or len(set(ts)) != 3:
            raise InvalidConfiguration(f"triple point {k}: needs 3 distinct component ids")
        missing = [x for x in ts if x not in pairs]
        if missing:
            raise InvalidConfiguration(f"triple point {k}: unknown components {missing}")
        labels = {pairs[x] for x in ts}
        amb = sorted({i for p in labels for i in p})
        if len(amb) != 3 or labels != {(amb[0], amb[1]), (amb[0], amb[2]), (amb[1], amb[2])}:
            raise InvalidConfiguration(
                f"triple point {k}: pairs {sorted(labels)} are not the three pairs of one ambient triple")


def delta_matrix(cfg: CurveConfiguration) -> IntMatrix:
    """Alternating restriction map: one row per triple point, one column per component.

    For ambient indices ``i1 < i2 < i3`` the row has ``+1`` at the (i2, i3)
    component, ``-1`` at (i1, i3) and ``+1`` at (i1, i2).
    """
    rows = []
    for t in cfg.triple_points:
        row = [0] * len(cfg.components)
        comps = {cfg.components[cfg.column(x)].pair: cfg.column(x) for x in t.components}
        i1, i2, i3 = sorted({i for p in comps for i in p})
        row[comps[(i2, i3)]] += 1
        row[comps[(i1, i3)]] -= 1
        row[comps[(i1, i2)]] += 1
        rows.append(tuple(row))
    return tuple(rows)


def delta_star_matrix(cfg: CurveConfiguration) -> IntMatrix:
    return transpose(delta_matrix(cfg), ncols=len(cfg.components))


@dataclass(frozen=True)
class ConfigCohomology:
    """Diamond plus the weight-graded dimensions that assemble it."""

    diamond: HodgeDiamond
    rank_delta: int
    rank_delta_star: int
    n_components: int
    n_triple_points: int
    genus_sum: int

    @property
    def h10_split(self) -> tuple[int, int]:
        # (sum of component h^{1,0}, dim coker delta)
        return (self.genus_sum, self.n_triple_points - self.rank_delta)

    @property
    def h01_split(self) -> tuple[int, int]:
        # (dim ker delta*, sum of component h^{0,1})
        return (self.n_triple_points - self.rank_delta_star, self.genus_sum)


def config_cohomology(cfg: CurveConfiguration) -> ConfigCohomology:
    D = delta_matrix(cfg)
    Ds = delta_star_matrix(cfg)
    M, n, g = len(cfg.components), len(cfg.triple_points), cfg.genus_sum
    r, rs = rank_exact(D), rank_exact(Ds)
    h00 = M - r           # dim ker delta
    h11 = M - rs          # dim coker delta*
    h10 = g + (n - r)     # components' H^{1,0} + coker delta
    h01 = (n - rs) + g    # ker delta* + components' H^{0,1}
    return ConfigCohomology(HodgeDiamond(h00, h10, h01, h11), r, rs, M, n, g)


def config_hodge(cfg: CurveConfiguration) -> HodgeDiamond:
    return config_cohomology(cfg).diamond


def config_euler(cfg: CurveConfiguration) -> int:
    """``sum (2 - 2 g_i) - 2 #triple points``, checked against the diamond."""
    value = sum(2 - 2 * c.genus for c in cfg.components) - 2 * len(cfg.triple_points)
    if value != config_hodge(cfg).euler():
        raise InternalInconsistency("configuration Euler number disagrees with its diamond")
    return value


def ambient_graph_b1(cfg: CurveConfiguration) -> int:
    """First Betti number of the graph with a vertex per used ambient surface
    and an edge per curve component: edges - vertices + connected components."""
    parent: dict[int, int] = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c in cfg.components:
        for i in c.pair:
            parent.setdefault(i, i)
    for c in cfg.components:
        a, b = find(c.pair[0]), find(c.pair[1])
        if a != b:
            parent[a] = b
    n_cc = len({find(x) for x in parent})
    return len(cfg.components) - len(parent) + n_cc


def batyrev_consistency(cfg: CurveConfiguration, inv: PerverseCurveInvariants) -> dict:
    """Compare a configuration against polytope-derived invariants.

    Reports, without raising, whether ``rank delta`` equals ``b1(Gamma)`` and
    whether the two diamonds agree. The rank identity is only guaranteed for
    degenerations coming from a reflexive polytope.
    """
    coh = config_cohomology(cfg)
    poly_diamond = diamond_from_invariants(inv)
    rank_ok = coh.rank_delta == inv.b1_gamma
    diamond_ok = coh.diamond == poly_diamond
    return {
        "status": "pass" if rank_ok and diamond_ok else "fail",
        "rank_delta": {"status": "pass" if rank_ok else "fail",
                       "lhs": coh.rank_delta, "rhs": inv.b1_gamma},
        "diamond": {"status": "pass" if diamond_ok else "fail",
                    "lhs": list(coh.diamond.as_tuple()), "rhs": list(poly_diamond.as_tuple())},
    }


def relabel_ambient(cfg: CurveConfiguration, perm: Sequence[int]) -> CurveConfiguration:
    """Rename ambient surface ``i`` to ``perm[i - 1]`` (a permutation of 1..N)."""
    if sorted(perm) != list(range(1, cfg.ambient_count + 1)):
        raise ValueError("perm must be a permutation of 1..N")
    comps = tuple(CurveComponent(c.id, tuple(sorted((perm[c.pair[0] - 1], perm[c.pair[1] - 1]))),
                                 c.genus) for c in cfg.components)
    return CurveConfiguration(cfg.ambient_count, comps, cfg.triple_points)


# ---------------------------------------------------------------------------
# reference configurations


def genus_two_mirror() -> CurveConfiguration:
    """Three rational curves on three surfaces meeting in two triple points."""
    comps = (CurveComponent("12", (1, 2), 0), CurveComponent("13", (1, 3), 0),
             CurveComponent("23", (2, 3), 0))
    tps = (TriplePoint(("12", "13", "23")), TriplePoint(("12", "13", "23")))
    return CurveConfiguration(3, comps, tps)


def schoen() -> CurveConfiguration:
    """24 disjoint elliptic curves, each on its own pair of ambient surfaces."""
    comps = tuple(CurveComponent(f"E{k + 1}", (2 * k + 1, 2 * k + 2), 1) for k in range(24))
    return CurveConfiguration(48, comps, ())


__all__ = [
    "CurveComponent", "TriplePoint", "CurveConfiguration", "ConfigCohomology", "validate",
    "delta_matrix", "delta_star_matrix", "config_cohomology", "config_hodge", "config_euler",
    "ambient_graph_b1", "batyrev_consistency", "relabel_ambient", "genus_two_mirror", "schoen",
]
