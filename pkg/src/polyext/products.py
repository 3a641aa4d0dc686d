"""Prisms over polytopes and the slice faces of extensions of prisms.

Coordinates passed as ``coord`` are 1-based, so ``coord = p + 1`` is the
coordinate right after a p-dimensional target.  ``after`` counts the
leading coordinates kept in front of an inserted [0, 1] factor.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    BadDimension,
    CoordinateOutOfRange,
    EmptySlice,
    IndexOutOfRange,
    NotAFace,
    NotAnExtension,
)
from .extensions import canonical, hidden_vertices, is_extension
from .polytope import VPolytope, h_of, hull, incidence, size

_ZERO, _ONE = Fraction(0), Fraction(1)


def prism(P: VPolytope, after=None) -> VPolytope:
    """P x [0, 1] with the new coordinate inserted after ``after`` coordinates.

    ``after`` defaults to appending.  The vertices of a product are the
    products of vertices, so no hull computation is needed.
    """
    a = P.dim if after is None else after
    if not 0 <= a <= P.dim:
        raise IndexOutOfRange(f"cannot insert a coordinate after {a} of {P.dim}")
    verts = [v[:a] + (t,) + v[a:] for v in P.vertices for t in (_ZERO, _ONE)]
    return VPolytope(P.dim + 1, tuple(sorted(verts)))


def power_prism(P: VPolytope, d: int, after=None) -> VPolytope:
    """P x [0, 1]^d; the new coordinates sit in order starting after ``after``."""
    if not isinstance(d, int) or not 0 <= d <= 6:
        raise BadDimension(f"d must be in 0..6, got {d!r}")
    Q = P
    for i in range(d):
        Q = prism(Q, None if after is None else after + i)
    return Q


def product_family(Q: VPolytope, P: VPolytope, d: int):
    """``(Q_d, P_d)``: Q_d extends P_d = P x [0,1]^d when Q extends P."""
    return power_prism(Q, d, after=P.dim), power_prism(P, d)


def _coord_index(Q: VPolytope, coord: int) -> int:
    if not 1 <= coord <= Q.dim:
        raise IndexOutOfRange(f"coordinate {coord} out of 1..{Q.dim}")
    return coord - 1


def slice_faces(Q: VPolytope, coord: int):
    """Faces of Q where the coordinate ``coord`` equals 0 and 1."""
    c = _coord_index(Q, coord)
    vals = [v[c] for v in Q.vertices]
    if any(x < 0 or x > 1 for x in vals):
        raise NotAFace(f"coordinate {coord} leaves [0, 1], so its slices are not faces")
    lo = [v for v in Q.vertices if v[c] == 0]
    hi = [v for v in Q.vertices if v[c] == 1]
    if not lo or not hi:
        raise EmptySlice(f"no vertex at {0 if not lo else 1} in coordinate {coord}")
    return hull(lo)[0], hull(hi)[0]


@dataclass(frozen=True)
class VertexPartition:
    V0: tuple
    V1: tuple
    Vstar: tuple


def vertex_partition(Q: VPolytope, coord: int) -> VertexPartition:
    c = _coord_index(Q, coord)
    parts = ([], [], [])
    for i, v in enumerate(Q.vertices):
        x = v[c]
        if x < 0 or x > 1:
            raise CoordinateOutOfRange(f"vertex {i} has coordinate {x} outside [0, 1]")
        parts[0 if x == 0 else 1 if x == 1 else 2].append(i)
    return VertexPartition(*map(tuple, parts))


def hidden_fraction(Q: VPolytope, P: VPolytope) -> Fraction:
    Q = canonical(Q)
    return Fraction(len(hidden_vertices(Q, P)), len(Q.vertices))


@dataclass(frozen=True)
class SliceLemmaReport:
    k: int
    f0: int
    f1: int
    c0: int
    c1: int
    d0: int
    d1: int
    inequality_holds: tuple
    slices_are_extensions: tuple

    @property
    def tight(self) -> tuple:
        return (
            self.f0 == self.k - self.c0 - self.d0,
            self.f1 == self.k - self.c1 - self.d1,
        )

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "f0": self.f0,
            "f1": self.f1,
            "c0": self.c0,
            "c1": self.c1,
            "d0": self.d0,
            "d1": self.d1,
            "inequality_holds": list(self.inequality_holds),
            "slices_are_extensions": list(self.slices_are_extensions),
        }


def _drop_coordinate(F: VPolytope, c: int) -> VPolytope:
    return VPolytope(F.dim - 1, tuple(sorted(v[:c] + v[c + 1:] for v in F.vertices)))


def _factor_shadow(Q: VPolytope, p: int, c: int) -> VPolytope:
    """Projection onto the first ``p`` coordinates and coordinate ``c`` (0-based)."""
    keep = list(range(p)) + ([c] if c >= p + 1 else [p])
    return hull([tuple(v[i] for i in keep) for v in Q.vertices])[0]


def verify_slice_lemma(Q: VPolytope, P: VPolytope, coord=None) -> SliceLemmaReport:
    """Facet counts of the two slice faces of an extension of P x [0, 1].

    The [0, 1] factor sits at coordinate ``coord`` of Q (default ``P.dim + 1``).
    Up to ``P.dim + 1`` it is inserted among the target coordinates; beyond
    that it is read from an extra coordinate, as in an appended prism.
    C_i counts facets of Q containing slice i, D_i facets missing it.
    """
    coord = P.dim + 1 if coord is None else coord
    if not 1 <= coord <= Q.dim or Q.dim <= P.dim:
        raise IndexOutOfRange(f"coordinate {coord} out of 1..{Q.dim}")
    Q = canonical(Q)
    target = prism(P, after=min(coord - 1, P.dim))
    if _factor_shadow(Q, P.dim, coord - 1).vertices != canonical(target).vertices:
        raise NotAnExtension("Q is not an extension of P x [0, 1]")
    c = coord - 1
    H = h_of(Q)
    facets = incidence(Q, H).facet_sets
    k = len(H.inequalities)
    out = {}
    for i, F in enumerate(slice_faces(Q, coord)):
        verts = frozenset(j for j, v in enumerate(Q.vertices) if v[c] == i)
        out[f"f{i}"] = size(F)
        out[f"c{i}"] = sum(1 for fs in facets if verts <= fs)
        out[f"d{i}"] = sum(1 for fs in facets if not (verts & fs))
        out[f"ext{i}"] = is_extension(_drop_coordinate(F, c), P)
    return SliceLemmaReport(
        k=k,
        f0=out["f0"],
        f1=out["f1"],
        c0=out["c0"],
        c1=out["c1"],
        d0=out["d0"],
        d1=out["d1"],
        inequality_holds=(
            out["f0"] <= k - out["c0"] - out["d0"],
            out["f1"] <= k - out["c1"] - out["d1"],
        ),
        slices_are_extensions=(out["ext0"], out["ext1"]),
    )
