"""JSON encodings of polytopes, heptagons and reports.

Rationals are strings ``"p/q"`` (reduced, q > 0) or ``"p"`` when q = 1.
Inequality and equation coefficients are plain JSON integers.
"""

from __future__ import annotations

import json
from fractions import Fraction

import dataclasses

from .errors import InputError, NotConvexHeptagon
from .heptagon import GPReport, Heptagon, LiftedExtension
from .kernel import format_rational, to_rational
from .polytope import HPolytope, VPolytope, hull

SCHEMA_VERSION = "1"

__all__ = [
    "SCHEMA_VERSION",
    "dumps",
    "gp_report_to_json",
    "lifted_extension_to_json",
    "witness_to_json",
    "format_rational",
    "heptagon_from_json",
    "hpolytope_from_json",
    "hpolytope_to_json",
    "load",
    "point_to_json",
    "polytope_from_json",
    "vpolytope_from_json",
    "vpolytope_to_json",
]


def dumps(doc: dict) -> str:
    """Deterministic serialization with the schema version first."""
    out = {"schema_version": SCHEMA_VERSION}
    out.update(doc)
    return json.dumps(out, indent=2) + "\n"


def load(path) -> dict:
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}: not valid JSON ({exc})") from None
    if not isinstance(doc, dict):
        raise InputError(f"{path}: top level must be an object")
    return doc


def point_to_json(p) -> list:
    return [format_rational(x) for x in p]


def _dim(doc) -> int:
    dim = doc.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise InputError("'dim' must be a positive integer")
    return dim


def vpolytope_from_json(doc: dict) -> VPolytope:
    """Canonical V-form (the hull of the listed points)."""
    dim = _dim(doc)
    pts = doc.get("vertices")
    if not isinstance(pts, list) or not pts:
        raise InputError("'vertices' must be a nonempty list")
    out = []
    for p in pts:
        if not isinstance(p, list) or len(p) != dim:
            raise InputError(f"vertex {p!r} does not have {dim} coordinates")
        out.append(tuple(to_rational(x) for x in p))
    return hull(out)[0]


def vpolytope_to_json(P: VPolytope) -> dict:
    return {"dim": P.dim, "vertices": [point_to_json(v) for v in P.vertices]}


def _integer_rows(rows, dim, what):
    if not isinstance(rows, list):
        raise InputError(f"'{what}' must be a list")
    out = []
    for row in rows:
        if not isinstance(row, dict) or "normal" not in row or "rhs" not in row:
            raise InputError(f"each entry of '{what}' needs 'normal' and 'rhs'")
        normal = row["normal"]
        if not isinstance(normal, list) or len(normal) != dim:
            raise InputError(f"normal {normal!r} does not have {dim} entries")
        out.append((tuple(to_rational(x) for x in normal), to_rational(row["rhs"])))
    return tuple(out)


def hpolytope_from_json(doc: dict) -> HPolytope:
    dim = _dim(doc)
    ineqs = _integer_rows(doc.get("inequalities", []), dim, "inequalities")
    eqs = _integer_rows(doc.get("equations", []), dim, "equations")
    return HPolytope(dim, ineqs, eqs)


def _int_or_str(x):
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else format_rational(x)


def hpolytope_to_json(H: HPolytope) -> dict:
    def rows(pairs):
        return [
            {"normal": [_int_or_str(a) for a in n], "rhs": _int_or_str(b)}
            for n, b in pairs
        ]

    return {
        "dim": H.dim,
        "inequalities": rows(H.inequalities),
        "equations": rows(H.equations),
    }


def polytope_from_json(doc: dict):
    """V-form or H-form, depending on which keys are present."""
    if "vertices" in doc:
        return vpolytope_from_json(doc)
    if "inequalities" in doc or "equations" in doc:
        return hpolytope_from_json(doc)
    raise InputError("polytope JSON needs 'vertices' or 'inequalities'")


def heptagon_from_json(doc: dict):
    dim = _dim(doc)
    pts = doc.get("vertices")
    if dim != 2 or not isinstance(pts, list) or len(pts) != 7:
        raise NotConvexHeptagon("a heptagon file needs dim 2 and exactly 7 vertices")
    for p in pts:
        if not isinstance(p, list) or len(p) != 2:
            raise InputError(f"vertex {p!r} is not planar")
    pts = [tuple(to_rational(x) for x in p) for p in pts]
    try:
        return Heptagon(pts)  # keep the file's labels when they are already valid
    except NotConvexHeptagon:
        return Heptagon.from_points(pts)


def _plain(x):
    """Tuples of rationals become lists of strings; ints stay ints."""
    if isinstance(x, bool) or isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, (tuple, list)):
        return [_plain(y) for y in x]
    raise TypeError(f"cannot encode {type(x).__name__}")


def gp_report_to_json(report: GPReport) -> dict:
    return {
        "in_general_position": report.in_general_position,
        "counts": {str(c): report.count(c) for c in (1, 2, 3)},
        "violations": [
            {"condition": v.condition, "vertices": list(v.vertices), "points": _plain(v.points)}
            for v in report.violations
        ],
    }


def lifted_extension_to_json(ext: LiftedExtension) -> dict:
    return {
        "shift": ext.shift,
        "reflected": ext.reflected,
        "labels": list(ext.labels),
        "z1": format_rational(ext.z1),
        "z4": format_rational(ext.z4),
        "lifted_points": _plain(ext.lifted_points),
        "removed_facet": list(ext.removed_facet),
        "apex": point_to_json(ext.apex),
        "extension": vpolytope_to_json(ext.Q_v),
        "extension_h": hpolytope_to_json(ext.Q_h),
    }


def witness_to_json(w) -> dict:
    """``{"kind": ClassName, ...fields}``, nested sub-witnesses encoded the same way."""
    out = {"kind": type(w).__name__}
    for f in dataclasses.fields(w):
        val = getattr(w, f.name)
        out[f.name] = witness_to_json(val) if dataclasses.is_dataclass(val) else _plain(val)
    return out
