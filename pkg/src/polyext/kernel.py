"""Exact scalars, points and the small planar predicates everything else uses.

Scalars are :class:`fractions.Fraction` (always reduced, positive
denominator).  A point is a plain tuple of Fractions.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import (
    DegenerateLine,
    EmptyInput,
    InputError,
    MixedDimensions,
    WrongDimension,
)

Rational = Fraction
QPoint = tuple  # tuple[Fraction, ...]

_RATIONAL_RE = re.compile(r"-?[0-9]+(/[0-9]+)?")


def to_rational(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are rejected: nothing in this package is allowed to round.
    """
    if isinstance(value, bool):
        raise InputError(f"not a rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not _RATIONAL_RE.fullmatch(text):
            raise InputError(f"bad rational literal: {value!r}")
        num, _, den = text.partition("/")
        if den and int(den) == 0:
            raise InputError(f"zero denominator: {value!r}")
        return Fraction(int(num), int(den) if den else 1)
    raise InputError(f"not a rational: {value!r}")


def format_rational(value: Fraction) -> str:
    """``"p/q"``, or ``"p"`` when the denominator is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def qpoint(*coords) -> tuple:
    if len(coords) == 1 and not isinstance(coords[0], (int, str, Fraction)):
        coords = tuple(coords[0])
    return tuple(to_rational(c) for c in coords)


def ambient_dim(points: Sequence[tuple]) -> int:
    if not points:
        raise EmptyInput("no points given")
    n = len(points[0])
    if any(len(p) != n for p in points):
        raise MixedDimensions("points have different lengths")
    return n


def primitive(vec: Sequence[int]) -> tuple:
    """Divide an integer vector by the gcd of its entries."""
    g = 0
    for x in vec:
        g = math.gcd(g, x)
    if g <= 1:
        return tuple(vec)
    return tuple(x // g for x in vec)


def clear_denominators(vec: Iterable[Fraction]) -> tuple:
    """Positive multiple of a rational vector with integer entries, primitive."""
    vec = [Fraction(x) for x in vec]
    m = 1
    for x in vec:
        m = m * x.denominator // math.gcd(m, x.denominator)
    return primitive([int(x * m) for x in vec])


def matrix_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Exact rank by fraction-free Gaussian elimination.

    Rows are kept integral and primitive; the pivot is the lowest-index
    remaining row with a nonzero entry in the current column.
    """
    mat = [list(clear_denominators(r)) for r in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(mat)) if mat[i][col] != 0), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        prow = mat[rank]
        p = prow[col]
        for i in range(rank + 1, len(mat)):
            f = mat[i][col]
            if f == 0:
                continue
            mat[i] = list(primitive([p * a - f * b for a, b in zip(mat[i], prow)]))
        rank += 1
        if rank == len(mat):
            break
    return rank


def affine_dimension(points: Sequence[tuple]) -> int:
    """Dimension of the affine hull of ``points`` (0 for one point)."""
    ambient_dim(points)
    base = points[0]
    diffs = [[a - b for a, b in zip(p, base)] for p in points[1:]]
    return matrix_rank(diffs)


def _require_2d(*pts):
    for p in pts:
        if len(p) != 2:
            raise WrongDimension(f"expected a planar point, got {p!r}")


def orient2d(a, b, c) -> Fraction:
    """Twice the signed area of triangle abc (positive for a left turn)."""
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def collinear_2d(a, b, c) -> bool:
    _require_2d(a, b, c)
    return orient2d(a, b, c) == 0


class LineRelation(enum.Enum):
    POINT = "point"
    PARALLEL = "parallel"
    COINCIDENT = "coincident"


@dataclass(frozen=True)
class LineIntersection:
    kind: LineRelation
    point: Optional[tuple] = None

    @property
    def is_point(self) -> bool:
        return self.kind is LineRelation.POINT


def intersect_lines_2d(p1, p2, p3, p4) -> LineIntersection:
    """Intersection of line p1p2 with line p3p4."""
    _require_2d(p1, p2, p3, p4)
    if p1 == p2 or p3 == p4:
        raise DegenerateLine("a line needs two distinct points")
    d1 = (p2[0] - p1[0], p2[1] - p1[1])
    d2 = (p4[0] - p3[0], p4[1] - p3[1])
    den = d1[0] * d2[1] - d1[1] * d2[0]
    if den == 0:
        if orient2d(p1, p2, p3) == 0:
            return LineIntersection(LineRelation.COINCIDENT)
        return LineIntersection(LineRelation.PARALLEL)
    s = ((p3[0] - p1[0]) * d2[1] - (p3[1] - p1[1]) * d2[0]) / Fraction(den)
    return LineIntersection(
        LineRelation.POINT, (p1[0] + s * d1[0], p1[1] + s * d1[1])
    )
