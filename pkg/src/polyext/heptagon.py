"""Convex heptagons: general-position checks, the lift-and-cut extension, gallery.

The lift-and-cut extension lifts two vertices of the heptagon so that
they and two neighbouring base vertices are coplanar, takes the convex
hull in 3-space, and drops the inequality of the triangle spanned by the
first, fourth and sixth lifted points.  The result has six facets, still
projects onto the heptagon, and gains one new vertex over its interior.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key, lru_cache

from .errors import (
    BadDimension,
    ConstructionError,
    InputError,
    NonPositiveHeight,
    NotConvexHeptagon,
    NoValidLabeling,
    Unbounded,
)
from .kernel import (
    affine_dimension,
    intersect_lines_2d,
    orient2d,
    to_rational,
)
from .polytope import HPolytope, VPolytope, hull, incidence, project, vertices_of


@dataclass(frozen=True)
class Heptagon:
    """Seven planar points in strictly convex counterclockwise order."""

    vertices: tuple

    def __post_init__(self):
        pts = tuple(tuple(to_rational(c) for c in p) for p in self.vertices)
        object.__setattr__(self, "vertices", pts)
        if len(pts) != 7:
            raise NotConvexHeptagon(f"expected 7 vertices, got {len(pts)}")
        if any(len(p) != 2 for p in pts):
            raise NotConvexHeptagon("heptagon vertices must be planar")
        if len(set(pts)) != 7:
            raise NotConvexHeptagon("heptagon vertices must be distinct")
        for i in range(7):
            a, b = pts[i], pts[(i + 1) % 7]
            for j in range(7):
                if j in (i, (i + 1) % 7):
                    continue
                if orient2d(a, b, pts[j]) <= 0:
                    raise NotConvexHeptagon(
                        "vertices are not in strictly convex counterclockwise order"
                    )

    @classmethod
    def from_points(cls, points) -> "Heptagon":
        """Order seven points counterclockwise, lexicographically smallest first."""
        pts = [tuple(to_rational(c) for c in p) for p in points]
        if len(pts) != 7 or any(len(p) != 2 for p in pts):
            raise NotConvexHeptagon("a heptagon needs exactly 7 planar points")
        start = min(pts)
        rest = [p for p in pts if p != start]

        def by_angle(a, b):
            s = orient2d(start, a, b)
            return -1 if s > 0 else (1 if s < 0 else 0)

        rest.sort(key=cmp_to_key(by_angle))
        return cls((start,) + tuple(rest))

    @property
    def polytope(self) -> VPolytope:
        return VPolytope(2, tuple(sorted(self.vertices)))


# --- general position -----------------------------------------------------


@dataclass(frozen=True)
class Violation:
    """One failed general-position condition.

    ``vertices`` are indices into the heptagon.  Condition 1 lists chords
    (v0 v1) and (v2 v3); condition 2 lists three chords and carries the
    common point; condition 3 lists u1..u7 and carries the three
    intersection points.
    """

    condition: int
    vertices: tuple
    points: tuple = ()


@dataclass(frozen=True)
class GPReport:
    violations: tuple = field(default_factory=tuple)

    @property
    def in_general_position(self) -> bool:
        return not self.violations

    def count(self, condition: int) -> int:
        return sum(1 for v in self.violations if v.condition == condition)


def _matchings(items):
    """All perfect matchings of an even-length tuple, as tuples of pairs."""
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for i, other in enumerate(rest):
        remaining = rest[:i] + rest[i + 1:]
        for m in _matchings(remaining):
            yield ((first, other),) + m


# The three intersection points tested by condition 3, as chord pairs over
# u1..u7 (0-based here).
_COND3_PAIRS = (((0, 1), (2, 3)), ((1, 4), (3, 5)), ((2, 6), (0, 4)))


@lru_cache(maxsize=1)
def condition3_assignments() -> tuple:
    """One assignment u1..u7 per distinct configuration of condition 3.

    Two assignments are equivalent when they name the same three pairs of
    chords; the lexicographically first permutation represents each class.
    """
    seen = {}
    for perm in itertools.permutations(range(7)):
        key = frozenset(
            frozenset(
                frozenset((perm[a], perm[b])) for a, b in pair
            )
            for pair in _COND3_PAIRS
        )
        seen.setdefault(key, perm)
    return tuple(sorted(seen.values()))


def check_general_position(P: Heptagon) -> GPReport:
    v = P.vertices
    found = []

    for quad in itertools.combinations(range(7), 4):
        for (a, b), (c, d) in _matchings(quad):
            if not intersect_lines_2d(v[a], v[b], v[c], v[d]).is_point:
                found.append(Violation(1, (a, b, c, d)))

    for six in itertools.combinations(range(7), 6):
        for (a, b), (c, d), (e, f) in _matchings(six):
            x = intersect_lines_2d(v[a], v[b], v[c], v[d])
            if x.is_point and orient2d(v[e], v[f], x.point) == 0:
                found.append(Violation(2, (a, b, c, d, e, f), (x.point,)))

    for perm in condition3_assignments():
        u = [v[i] for i in perm]
        pts = []
        for (a, b), (c, d) in _COND3_PAIRS:
            x = intersect_lines_2d(u[a], u[b], u[c], u[d])
            if not x.is_point:
                break
            pts.append(x.point)
        else:
            if orient2d(*pts) == 0:
                found.append(Violation(3, perm, tuple(pts)))

    return GPReport(tuple(found))


# --- lift-and-cut ---------------------------------------------------------


@dataclass(frozen=True)
class LiftedExtension:
    base: Heptagon
    shift: int
    reflected: bool
    z1: Fraction
    z4: Fraction
    lifted_points: tuple
    removed_facet: tuple
    Q_v: VPolytope
    Q_h: HPolytope
    apex: tuple

    @property
    def labels(self) -> tuple:
        return relabeling(self.shift, self.reflected)


def relabeling(shift: int, reflected: bool) -> tuple:
    """Base indices of v1..v7 under a cyclic shift and optional reflection."""
    if reflected:
        return tuple((shift - i) % 7 for i in range(7))
    return tuple((shift + i) % 7 for i in range(7))


def lift_heights(v, z1):
    """Heights (z1, z4) making (v1,z1), (v2,0), (v3,0), (v4,z4) coplanar."""
    side1 = orient2d(v[1], v[2], v[0])
    side4 = orient2d(v[1], v[2], v[3])
    if side1 == 0:
        raise NonPositiveHeight("v1 lies on the line v2 v3")
    z4 = z1 * side4 / side1
    if z4 <= 0:
        raise NonPositiveHeight(f"computed z4 = {z4}")
    return z1, z4


def _try_labeling(P: Heptagon, shift, reflected, z1):
    labels = relabeling(shift, reflected)
    v = [P.vertices[i] for i in labels]
    z1, z4 = lift_heights(v, z1)
    heights = [z1, 0, 0, z4, 0, 0, 0]
    w = tuple(p + (Fraction(h),) for p, h in zip(v, heights))
    Qp_v, Qp_h = hull(w)

    target = {w[0], w[3], w[5]}
    inc = incidence(Qp_v, Qp_h)
    drop = None
    for j, fs in enumerate(inc.facet_sets):
        if {Qp_v.vertices[i] for i in fs} == target:
            drop = j
            break
    if drop is None:
        return None

    kept = tuple(f for j, f in enumerate(Qp_h.inequalities) if j != drop)
    try:
        cut = vertices_of(HPolytope(3, kept))
    except Unbounded:
        return None
    Q_v, Q_h = hull(cut.vertices)
    if len(Q_h.inequalities) != 6 or affine_dimension(Q_v.vertices) != 3:
        return None
    if project(Q_v, 2).vertices != P.polytope.vertices:
        return None
    base = set(P.vertices)
    hidden = [q for q in Q_v.vertices if q[:2] not in base]
    if not hidden:
        return None
    return LiftedExtension(
        base=P,
        shift=shift,
        reflected=reflected,
        z1=z1,
        z4=z4,
        lifted_points=w,
        removed_facet=(labels[0], labels[3], labels[5]),
        Q_v=Q_v,
        Q_h=Q_h,
        apex=hidden[0],
    )


def build_heptagon_extension(P: Heptagon, z1=1) -> LiftedExtension:
    """Six-facet 3-dimensional extension of ``P`` with a hidden apex.

    Tries the seven cyclic shifts of the labels, then the seven shifts of
    the reflected labeling, and returns the first that verifies.
    """
    if not isinstance(P, Heptagon):
        P = Heptagon.from_points(P)
    z1 = to_rational(z1)
    if z1 <= 0:
        raise InputError("z1 must be positive")
    for reflected in (False, True):
        for shift in range(7):
            ext = _try_labeling(P, shift, reflected, z1)
            if ext is not None:
                return ext
    raise NoValidLabeling("none of the 14 labelings gives a 6-facet extension")


# --- gallery --------------------------------------------------------------

# Wedge: a square base with a ridge above it.
_HEXAGON_PRISM = ((4, 2, 0), (4, 4, 0), (2, 4, 0), (2, 2, 0), (5, 3, 1), (1, 3, 1))


def build_hexagon_prism_extension():
    """A triangular prism (5 facets) whose shadow is a hexagon (6 facets)."""
    Q = hull(_HEXAGON_PRISM)[0]
    return project(Q, 2), Q


def cross_polytope(d: int) -> VPolytope:
    pts = []
    for i in range(d):
        for s in (1, -1):
            pts.append(tuple(s if j == i else 0 for j in range(d)))
    return hull(pts)[0]


def build_cross_polytope_extension(d: int):
    """The (2d-1)-simplex in R^{3d} projecting onto the d-dimensional cross-polytope.

    Vertex j carries the unit vector e_j in its last 2d coordinates and
    +e_j (j < d) or -e_{j-d} in its first d.
    """
    if not isinstance(d, int) or not 1 <= d <= 5:
        raise BadDimension(f"d must be in 1..5, got {d!r}")
    pts = []
    for j in range(2 * d):
        x = [0] * d
        x[j % d] = 1 if j < d else -1
        lam = [int(k == j) for k in range(2 * d)]
        pts.append(tuple(x + lam))
    Q, H = hull(pts)
    P = cross_polytope(d)
    if (
        len(Q.vertices) != 2 * d
        or affine_dimension(Q.vertices) != 2 * d - 1
        or len(H.inequalities) != 2 * d
    ):
        raise ConstructionError("cross-polytope extension is not a simplex")
    if project(Q, d) != P:
        raise ConstructionError("cross-polytope extension has the wrong shadow")
    return P, Q
