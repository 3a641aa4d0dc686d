"""Vertex and inequality representations of polytopes and conversions between them.

Everything is exact.  Canonical forms make polytope equality a plain
comparison: vertices are the extreme points in lexicographic order, and
inequalities ``normal . x <= rhs`` are facet-defining, integral, primitive
(over normal and rhs together), reduced modulo the affine hull and sorted.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from operator import mul
from typing import Sequence

from .dd import cone_generators
from .errors import (
    BadCoordinateCount,
    BadParameters,
    EmptyInput,
    EmptyPolytope,
    IndexOutOfRange,
    InputError,
    MixedDimensions,
    PreconditionViolated,
    RepresentationMismatch,
    Unbounded,
    UnknownType,
)
from .kernel import affine_dimension, clear_denominators, to_rational


@dataclass(frozen=True)
class VPolytope:
    dim: int
    vertices: tuple

    @classmethod
    def from_points(cls, points) -> "VPolytope":
        """Canonical V-representation of the convex hull of ``points``."""
        return hull(points)[0]

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)


@dataclass(frozen=True)
class HPolytope:
    """``normal . x <= rhs`` for each inequality, ``normal . x = rhs`` for each equation."""

    dim: int
    inequalities: tuple
    equations: tuple = ()


def _as_points(points) -> tuple:
    pts = [tuple(to_rational(c) for c in p) for p in points]
    if not pts:
        raise EmptyInput("no points given")
    n = len(pts[0])
    if n == 0:
        raise InputError("points must have at least one coordinate")
    if any(len(p) != n for p in pts):
        raise MixedDimensions("points have different lengths")
    return tuple(sorted(set(pts)))


# --- V -> H ---------------------------------------------------------------


def _rref(rows, pivot_from):
    """Reduced row echelon form of rational rows, pivots chosen at columns >= pivot_from."""
    mat = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    ncols = len(mat[0]) if mat else 0
    for c in range(pivot_from, ncols):
        k = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if k is None:
            continue
        mat[r], mat[k] = mat[k], mat[r]
        p = mat[r][c]
        mat[r] = [x / p for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    return mat[:r], pivots


def _hull_from_unique(pts: tuple):
    n = len(pts[0])
    rows = [clear_denominators((1,) + p) for p in pts]
    lin, rays = cone_generators(rows, [], n + 1)

    # lineality vector (l0, l) means l0 + l.x = 0 on every point
    basis, pivots = _rref(lin, 1) if lin else ([], [])
    equations = []
    for row in basis:
        vec = clear_denominators(row)
        normal, rhs = tuple(-x for x in vec[1:]), vec[0]
        lead = next(x for x in normal if x != 0)
        if lead < 0:
            normal, rhs = tuple(-x for x in normal), -rhs
        equations.append((normal, rhs))
    equations.sort()

    facets = []
    for ray in rays:
        if basis:
            y = [Fraction(x) for x in ray]
            for row, c in zip(basis, pivots):
                f = y[c]
                if f:
                    y = [a - f * b for a, b in zip(y, row)]
            vec = clear_denominators(y)
        else:
            vec = ray  # already primitive
        normal, rhs = tuple(-x for x in vec[1:]), vec[0]
        if all(x == 0 for x in normal):
            continue  # the trivial 0 <= rhs of a single point
        facets.append((normal, rhs))
    facets = sorted(set(facets))

    # row = k * (1, p) with k > 0, so a . p = b  iff  a . row[1:] = b * row[0]
    tight = []
    for row in rows:
        m = 0
        for j, (a, b) in enumerate(facets):
            if sum(map(mul, a, row[1:])) == b * row[0]:
                m |= 1 << j
        tight.append(m)
    verts = []
    for i, m in enumerate(tight):
        if not any(j != i and mj & m == m for j, mj in enumerate(tight)):
            verts.append(pts[i])

    return VPolytope(n, tuple(verts)), HPolytope(n, tuple(facets), tuple(equations))


_hull_cached = lru_cache(maxsize=8192)(_hull_from_unique)


def hull(points):
    """Canonical ``(VPolytope, HPolytope)`` of the convex hull of ``points``."""
    return _hull_cached(_as_points(points))


def h_of(P: VPolytope) -> HPolytope:
    return hull(P.vertices)[1]


# --- H -> V ---------------------------------------------------------------


def _as_rows(pairs, n):
    out = []
    for normal, rhs in pairs:
        normal = [to_rational(x) for x in normal]
        if len(normal) != n:
            raise MixedDimensions("inequality has the wrong length")
        out.append((normal, to_rational(rhs)))
    return out


@lru_cache(maxsize=4096)
def _vertices_cached(n, ineqs, eqs):
    rows = [clear_denominators([b] + [-x for x in a]) for a, b in ineqs]
    rows.append(tuple([1] + [0] * n))
    rows = sorted(set(rows))
    erows = [clear_denominators([d] + [-x for x in c]) for c, d in eqs]
    lin, rays = cone_generators(rows, erows, n + 1)
    finite = [r for r in rays if r[0] > 0]
    if not finite:
        raise EmptyPolytope("the inequality system has no solution")
    if lin or len(finite) != len(rays):
        raise Unbounded("the inequality system has a recession direction")
    verts = sorted({tuple(Fraction(x, r[0]) for x in r[1:]) for r in finite})
    return VPolytope(n, tuple(verts))


def vertices_of(H: HPolytope) -> VPolytope:
    """Canonical vertex list of the polytope ``H`` describes."""
    n = H.dim
    ineqs = tuple((tuple(a), b) for a, b in _as_rows(H.inequalities, n))
    eqs = tuple((tuple(c), d) for c, d in _as_rows(H.equations, n))
    return _vertices_cached(n, ineqs, eqs)


# --- basic queries --------------------------------------------------------


def size(P) -> int:
    """Number of facets (relative to the affine hull)."""
    if isinstance(P, VPolytope):
        P = h_of(P)
    return len(P.inequalities)


def dimension(P: VPolytope) -> int:
    return affine_dimension(P.vertices)


def project(P: VPolytope, k: int) -> VPolytope:
    """Orthogonal projection onto the first ``k`` coordinates."""
    if not 1 <= k <= P.dim:
        raise BadCoordinateCount(f"cannot keep {k} of {P.dim} coordinates")
    return hull([v[:k] for v in P.vertices])[0]


# --- incidence and faces --------------------------------------------------


@dataclass(frozen=True)
class Incidence:
    """Rows are vertices, columns are facets."""

    matrix: tuple

    @property
    def facet_sets(self) -> list:
        nf = len(self.matrix[0]) if self.matrix else 0
        return [
            frozenset(i for i, row in enumerate(self.matrix) if row[j])
            for j in range(nf)
        ]

    @property
    def vertex_sets(self) -> list:
        return [frozenset(j for j, x in enumerate(row) if x) for row in self.matrix]


def incidence(P: VPolytope, H: HPolytope) -> Incidence:
    rows = []
    for v in P.vertices:
        for c, d in H.equations:
            if sum(x * y for x, y in zip(c, v)) != d:
                raise RepresentationMismatch(f"vertex {v} violates an equation")
        row = []
        for a, b in H.inequalities:
            s = sum(x * y for x, y in zip(a, v))
            if s > b:
                raise RepresentationMismatch(f"vertex {v} violates an inequality")
            row.append(s == b)
        rows.append(tuple(row))
    return Incidence(tuple(rows))


def facet_vertex_sets(P: VPolytope) -> list:
    """Vertex-index sets of the facets of ``P``, in canonical facet order."""
    return incidence(P, h_of(P)).facet_sets


def is_face(P: VPolytope, H: HPolytope, subset: Sequence[int]) -> bool:
    """Whether exactly the vertices in ``subset`` span a face of the polytope."""
    if not subset:
        raise InputError("subset must be nonempty")
    for i in subset:
        if not 0 <= i < len(P.vertices):
            raise IndexOutOfRange(f"vertex index {i} out of range")
    want = frozenset(subset)
    closure = frozenset(range(len(P.vertices)))
    for fs in incidence(P, H).facet_sets:
        if want <= fs:
            closure &= fs
    return closure == want


# --- combinatorial types of 6-facet 3-polytopes ---------------------------


class CombinatorialType3D(enum.Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"


def incidence_isomorphic(facets_a, facets_b) -> bool:
    """Isomorphism of two vertex-facet incidence structures.

    Both arguments are lists of vertex-index sets, one per facet.  Facets
    are matched by backtracking; for a fixed facet bijection the vertex map
    is forced, because a polytope vertex is determined by its facets.
    """
    if len(facets_a) != len(facets_b):
        return False
    verts_a = sorted(set().union(*facets_a))
    verts_b = sorted(set().union(*facets_b))
    if len(verts_a) != len(verts_b):
        return False
    if sorted(map(len, facets_a)) != sorted(map(len, facets_b)):
        return False
    sig_a = [frozenset(j for j, f in enumerate(facets_a) if v in f) for v in verts_a]
    sig_b = {frozenset(j for j, f in enumerate(facets_b) if v in f) for v in verts_b}
    if len(sig_b) != len(verts_b) or len(set(sig_a)) != len(verts_a):
        return False
    m = len(facets_a)
    perm = [None] * m
    used = [False] * m

    def extend(i):
        if i == m:
            return {frozenset(perm[j] for j in s) for s in sig_a} == sig_b
        for j in range(m):
            if used[j] or len(facets_b[j]) != len(facets_a[i]):
                continue
            ok = True
            for k in range(i):
                if len(facets_a[i] & facets_a[k]) != len(facets_b[j] & facets_b[perm[k]]):
                    ok = False
                    break
            if not ok:
                continue
            used[j] = True
            perm[i] = j
            if extend(i + 1):
                return True
            used[j] = False
        return False

    return extend(0)


@lru_cache(maxsize=1)
def reference_types() -> dict:
    """Stored facet lists of the four combinatorial types, keyed by type."""
    text = resources.files("polyext").joinpath("data/types3d.json").read_text()
    raw = json.loads(text)
    return {
        CombinatorialType3D(k): [frozenset(f) for f in v["facets"]]
        for k, v in raw["types"].items()
    }


def classify_6facet_3polytope(P: VPolytope, H: HPolytope) -> CombinatorialType3D:
    if affine_dimension(P.vertices) != 3:
        raise PreconditionViolated("polytope is not 3-dimensional")
    if len(H.inequalities) != 6:
        raise PreconditionViolated(f"expected 6 facets, got {len(H.inequalities)}")
    if len(P.vertices) < 7:
        raise PreconditionViolated(f"expected at least 7 vertices, got {len(P.vertices)}")
    facets = incidence(P, H).facet_sets
    for kind, ref in reference_types().items():
        if incidence_isomorphic(facets, ref):
            return kind
    raise UnknownType("no reference type matches")


# --- 4-simplex cut by a halfspace ---------------------------------------


def simplex_cut_vertex_count(k: int, t: int) -> int:
    """Vertices of a 4-simplex cut by a halfspace.

    ``k`` simplex vertices lie on the cutting hyperplane and ``t`` beyond it.
    """
    if k < 0 or t < 1 or k + t > 5:
        raise BadParameters(f"need t >= 1, k >= 0, k + t <= 5; got k={k}, t={t}")
    return (5 - t) + (5 - k - t) * t


def enumerate_feasible_kt() -> list:
    """The (k, t) pairs whose cut simplex has at least 7 vertices, ordered by t then k."""
    return [
        (k, t)
        for t in range(1, 6)
        for k in range(0, 6 - t)
        if simplex_cut_vertex_count(k, t) >= 7
    ]

