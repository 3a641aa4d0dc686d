"""Extension checks, hidden vertices and refutation of hidden-vertex-free certificates.

A polytope Q is an extension of P when its orthogonal projection onto
the first ``P.dim`` coordinates equals P.  A vertex of Q is hidden when
its projection is not a vertex of P.

:func:`refute_hidden_free` takes a claimed six-facet extension of a
heptagon in general position with no hidden vertex and returns a reason
the claim fails.  Stages run cheapest first and every stage scans
candidates in lexicographic index order, so the witness is deterministic.
The counting stages are valid for any convex heptagon; general position
is demanded only once the certificate passes all of them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import (
    DimensionMismatch,
    InternalExhaustionError,
    NotAnExtension,
    NotGeneralPosition,
    PolyextError,
)
from .heptagon import Heptagon, check_general_position
from .kernel import affine_dimension, intersect_lines_2d, orient2d
from .polytope import (
    CombinatorialType3D,
    VPolytope,
    classify_6facet_3polytope,
    hull,
    incidence,
    project,
)


def canonical(P: VPolytope) -> VPolytope:
    return hull(P.vertices)[0]


def is_extension(Q: VPolytope, P: VPolytope) -> bool:
    if Q.dim < P.dim:
        raise DimensionMismatch(f"extension has dim {Q.dim} < target dim {P.dim}")
    return project(Q, P.dim).vertices == canonical(P).vertices


def _hidden(Q: VPolytope, P: VPolytope) -> list:
    targets = set(P.vertices)
    return [i for i, w in enumerate(Q.vertices) if w[: P.dim] not in targets]


def hidden_vertices(Q: VPolytope, P: VPolytope) -> list:
    """Indices (into Q's canonical vertex order) of the hidden vertices."""
    Q, P = canonical(Q), canonical(P)
    if not is_extension(Q, P):
        raise NotAnExtension("Q does not project onto P")
    return _hidden(Q, P)


@dataclass(frozen=True)
class ExtensionReport:
    is_extension: bool
    extension_size: int
    target_size: int
    vertex_count: int
    hidden: tuple
    hidden_fraction: Fraction

    def to_json(self) -> dict:
        from .io import format_rational

        return {
            "is_extension": self.is_extension,
            "extension_size": self.extension_size,
            "target_size": self.target_size,
            "vertex_count": self.vertex_count,
            "hidden": list(self.hidden),
            "hidden_fraction": format_rational(self.hidden_fraction),
        }


def extension_report(Q: VPolytope, P: VPolytope) -> ExtensionReport:
    Qv, Qh = hull(Q.vertices)
    Pv, Ph = hull(P.vertices)
    ok = Qv.dim >= Pv.dim and is_extension(Qv, Pv)
    hidden = tuple(_hidden(Qv, Pv)) if ok else ()
    frac = Fraction(len(hidden), len(Qv.vertices)) if ok else Fraction(0)
    return ExtensionReport(
        is_extension=ok,
        extension_size=len(Qh.inequalities),
        target_size=len(Ph.inequalities),
        vertex_count=len(Qv.vertices),
        hidden=hidden,
        hidden_fraction=frac,
    )


# --- witnesses ------------------------------------------------------------


@dataclass(frozen=True)
class NotExtension:
    pass


@dataclass(frozen=True)
class TooManyFacets:
    size: int


@dataclass(frozen=True)
class FewVertices:
    count: int


@dataclass(frozen=True)
class HiddenVertexFound:
    index: int


@dataclass(frozen=True)
class Lemma1Violation:
    """Four vertices, one coinciding projection pair, affinely dependent."""

    indices: tuple


@dataclass(frozen=True)
class ParallelChords:
    points: tuple


@dataclass(frozen=True)
class ConcurrentLines:
    points: tuple
    common: tuple


@dataclass(frozen=True)
class CollinearIntersections:
    points: tuple
    intersections: tuple


@dataclass(frozen=True)
class CoincidingPairOnEdge:
    pair: tuple
    face: tuple


@dataclass(frozen=True)
class PrismLemma2Witness:
    """Six vertices spanning a triangular prism, labelled w1..w6.

    (w1, w3, w5) and (w2, w4, w6) are the triangles and w1w2, w3w4, w5w6
    the lateral edges.
    """

    indices: tuple
    sub: Union[ParallelChords, ConcurrentLines, CoincidingPairOnEdge]


@dataclass(frozen=True)
class CaseDWitness:
    """Seven vertices of a type-D polytope labelled w1..w7.

    w1 w2 w5 is a triangle, w3 w4 w6 w7 a quadrilateral disjoint from it.
    """

    indices: tuple
    sub: Union[ParallelChords, CollinearIntersections]


RefutationWitness = Union[
    NotExtension,
    TooManyFacets,
    FewVertices,
    HiddenVertexFound,
    Lemma1Violation,
    PrismLemma2Witness,
    CaseDWitness,
]


def _coinciding_pairs(proj, idx):
    return [(a, b) for a, b in itertools.combinations(idx, 2) if proj[a] == proj[b]]


def find_lemma1_violation(Q: VPolytope, p: int) -> Optional[Lemma1Violation]:
    """First 4-subset with exactly one coinciding projection pair and affine dim <= 2."""
    proj = [w[:p] for w in Q.vertices]
    for quad in itertools.combinations(range(len(proj)), 4):
        if len(_coinciding_pairs(proj, quad)) != 1:
            continue
        if affine_dimension([Q.vertices[i] for i in quad]) <= 2:
            return Lemma1Violation(quad)
    return None


def triangular_prism_labels(points) -> Optional[tuple]:
    """``(labels, facets)`` if the six points span a triangular prism, else None.

    ``labels`` are local indices of w1..w6, ``facets`` local vertex sets.

    Qualifies when all six points are vertices of a hull with exactly five
    facets, two vertex-disjoint triangles and three quadrilaterals.
    """
    V, H = hull(points)
    if len(V.vertices) != 6 or len(H.inequalities) != 5 or len(set(points)) != 6:
        return None
    order = {v: i for i, v in enumerate(V.vertices)}
    local = [order[tuple(p)] for p in points]
    back = {g: i for i, g in enumerate(local)}
    facets = [frozenset(back[g] for g in fs) for fs in incidence(V, H).facet_sets]
    tris = [f for f in facets if len(f) == 3]
    quads = [f for f in facets if len(f) == 4]
    if len(tris) != 2 or len(quads) != 3 or tris[0] & tris[1]:
        return None
    labels = []
    for a in sorted(tris[0]):
        partners = [b for b in tris[1] if sum(1 for q in quads if a in q and b in q) == 2]
        if len(partners) != 1:
            return None
        labels += [a, partners[0]]
    return tuple(labels), facets


def _prism_sub(Q, idx, labels, facets, p):
    w = [idx[i] for i in labels]
    proj = [Q.vertices[i][:p] for i in w]
    pairs = _coinciding_pairs(proj, range(6))
    if len(pairs) > 1:
        return None
    if pairs:
        a, b = pairs[0]
        la, lb = labels[a], labels[b]
        holding = [f for f in facets if la in f and lb in f]
        if len(holding) < 2:
            return None  # not an edge of the prism
        quad = next((f for f in holding if len(f) == 4), None)
        if quad is None:
            return None
        return CoincidingPairOnEdge((w[a], w[b]), tuple(sorted(idx[i] for i in quad)))
    lines = [(proj[0], proj[1]), (proj[2], proj[3]), (proj[4], proj[5])]
    for (i, j) in ((0, 1), (1, 2), (0, 2)):
        x = intersect_lines_2d(*lines[i], *lines[j])
        if not x.is_point:
            return ParallelChords(lines[i] + lines[j])
    x = intersect_lines_2d(*lines[0], *lines[1]).point
    if orient2d(*lines[2], x) == 0:
        return ConcurrentLines(tuple(proj), x)
    return None


def find_prism_witness(Q: VPolytope, p: int) -> Optional[PrismLemma2Witness]:
    """First 6-subset spanning a triangular prism that yields a sub-witness."""
    proj = [w[:p] for w in Q.vertices]
    for six in itertools.combinations(range(len(proj)), 6):
        if len(_coinciding_pairs(proj, six)) > 1:
            continue
        found = triangular_prism_labels([Q.vertices[i] for i in six])
        if found is None:
            continue
        labels, facets = found
        sub = _prism_sub(Q, six, labels, facets, p)
        if sub is not None:
            return PrismLemma2Witness(tuple(six[i] for i in labels), sub)
    return None


def case_d_labels(Q: VPolytope) -> Optional[tuple]:
    """Vertex indices w1..w7 of a type-D polytope, or None if Q is not type D."""
    Qv, Qh = hull(Q.vertices)
    try:
        if classify_6facet_3polytope(Qv, Qh) is not CombinatorialType3D.D:
            return None
    except PolyextError:
        return None
    facets = incidence(Qv, Qh).facet_sets
    nfac = {v: sum(1 for f in facets if v in f) for v in range(len(Qv.vertices))}

    def adjacent(a, b):
        return sum(1 for f in facets if a in f and b in f) == 2

    for tri in (f for f in facets if len(f) == 3):
        for sq in (f for f in facets if len(f) == 4):
            if tri & sq:
                continue
            apex = [v for v in tri if nfac[v] == 4]
            if len(apex) != 1:
                continue
            w5 = apex[0]
            w1, w2 = sorted(tri - {w5})
            w3 = next(s for s in sq if adjacent(w1, s))
            w4 = next(s for s in sq if adjacent(w2, s))
            w7 = next(s for s in sq if adjacent(w5, s) and adjacent(w3, s))
            w6 = next(s for s in sq if adjacent(w5, s) and s != w7)
            return (w1, w2, w3, w4, w5, w6, w7)
    return None


def find_case_d_witness(Q: VPolytope, p: int) -> Optional[CaseDWitness]:
    """Type-D argument: three chord intersections forced onto one line."""
    Q = canonical(Q)
    if len(Q.vertices) != 7 or affine_dimension(Q.vertices) != 3:
        return None
    labels = case_d_labels(Q)
    if labels is None:
        return None
    u = [Q.vertices[i][:p] for i in labels]
    if len(set(u)) != 7:
        return None
    chords = (((0, 1), (2, 3)), ((1, 4), (3, 5)), ((2, 6), (0, 4)))
    pts = []
    for (a, b), (c, d) in chords:
        x = intersect_lines_2d(u[a], u[b], u[c], u[d])
        if not x.is_point:
            return CaseDWitness(labels, ParallelChords((u[a], u[b], u[c], u[d])))
        pts.append(x.point)
    if orient2d(*pts) == 0:
        return CaseDWitness(labels, CollinearIntersections(tuple(u), tuple(pts)))
    return None


def refute_hidden_free(P: Heptagon, Q: VPolytope) -> RefutationWitness:
    """Reason why Q is not a hidden-vertex-free minimum extension of P."""
    if not isinstance(P, Heptagon):
        P = Heptagon.from_points(P)
    Qv, Qh = hull(Q.vertices)
    if len(Qv.vertices) < 7:
        return FewVertices(len(Qv.vertices))
    target = P.polytope
    if Qv.dim < 2 or not is_extension(Qv, target):
        return NotExtension()
    if len(Qh.inequalities) > 6:
        return TooManyFacets(len(Qh.inequalities))
    hidden = _hidden(Qv, target)
    if hidden:
        return HiddenVertexFound(hidden[0])
    # only the remaining stages rely on general position
    if not check_general_position(P).in_general_position:
        raise NotGeneralPosition("target heptagon is not in general position")
    for stage in (find_lemma1_violation, find_prism_witness, find_case_d_witness):
        w = stage(Qv, 2)
        if w is not None:
            return w
    raise InternalExhaustionError(
        "no witness found for a hidden-vertex-free six-facet extension"
    )
