"""Command-line front end: ``polyext <command> ...``.

Reports go to stdout (or ``--out``) as JSON, diagnostics to stderr.
Exit status 0 means every check passed, 1 that a checked property
failed, 2 that the input could not be used.
"""

import argparse
import sys
from fractions import Fraction

from . import io
from .errors import (
    EmptyPolytope,
    InputError,
    InternalExhaustionError,
    NotGeneralPosition,
    PolyextError,
    Unbounded,
)
from .extensions import extension_report, hidden_vertices, refute_hidden_free
from .heptagon import (
    build_cross_polytope_extension,
    build_heptagon_extension,
    build_hexagon_prism_extension,
    check_general_position,
)
from .kernel import to_rational
from .polytope import HPolytope, VPolytope, h_of, hull, project, size, vertices_of
from .products import power_prism, product_family, verify_slice_lemma

OK, FAILED, BAD_INPUT = 0, 1, 2


class _Usage(Exception):
    pass


def _diag(msg):
    print(f"polyext: {msg}", file=sys.stderr)


def _path(args, name="input"):
    path = getattr(args, name, None) or getattr(args, "in_path", None)
    if not path:
        raise _Usage(f"missing input file for '{args.command}'")
    return path


def _vform(doc):
    P = io.polytope_from_json(doc)
    return vertices_of(P) if isinstance(P, HPolytope) else P


def _heptagon(path):
    return io.heptagon_from_json(io.load(path))


# --- commands -------------------------------------------------------------


def cmd_hull(args):
    P = io.polytope_from_json(io.load(_path(args)))
    if isinstance(P, HPolytope):
        raise InputError("hull expects a V-form polytope")
    H = h_of(P)
    return OK, {"command": "hull", "status": "ok", "polytope": io.hpolytope_to_json(H)}


def cmd_vertices(args):
    P = io.polytope_from_json(io.load(_path(args)))
    if isinstance(P, VPolytope):
        raise InputError("vertices expects an H-form polytope")
    try:
        V = vertices_of(P)
    except Unbounded as exc:
        _diag(str(exc))
        return FAILED, {"command": "vertices", "status": "unbounded"}
    except EmptyPolytope as exc:
        _diag(str(exc))
        return FAILED, {"command": "vertices", "status": "empty"}
    return OK, {"command": "vertices", "status": "ok", "polytope": io.vpolytope_to_json(V)}


def cmd_gp_check(args):
    P = _heptagon(_path(args))
    report = check_general_position(P)
    code = OK if report.in_general_position else FAILED
    return code, {"command": "gp-check", "report": io.gp_report_to_json(report)}


def cmd_build_ext(args):
    P = _heptagon(_path(args))
    ext = build_heptagon_extension(P, z1=to_rational(args.z1))
    rep = extension_report(ext.Q_v, P.polytope)
    passed = rep.is_extension and rep.extension_size == 6 and len(rep.hidden) >= 1
    doc = {
        "command": "build-ext",
        "status": "ok" if passed else "failed",
        "construction": io.lifted_extension_to_json(ext),
        "report": rep.to_json(),
    }
    return (OK if passed else FAILED), doc


def cmd_verify_ext(args):
    P = _vform(io.load(_path(args, "target")))
    Q = _vform(io.load(_path(args, "ext")))
    rep = extension_report(Q, P)
    return (OK if rep.is_extension else FAILED), {
        "command": "verify-ext",
        "report": rep.to_json(),
    }


def cmd_refute(args):
    P = _heptagon(_path(args, "target"))
    Q = _vform(io.load(_path(args, "cert")))
    try:
        w = refute_hidden_free(P, Q)
    except NotGeneralPosition as exc:
        raise InputError(str(exc)) from None
    except InternalExhaustionError as exc:
        _diag(str(exc))
        return FAILED, {"command": "refute", "status": "exhausted"}
    return OK, {"command": "refute", "status": "refuted", "witness": io.witness_to_json(w)}


def cmd_product(args):
    if args.d is None:
        raise _Usage("product needs --d")
    hept = _heptagon(_path(args, "target"))
    P = hept.polytope
    if args.ext:
        Q = _vform(io.load(args.ext))
    else:
        Q = build_heptagon_extension(hept).Q_v
    Qd, Pd = product_family(Q, P, args.d)
    rep = extension_report(Qd, Pd)
    doc = {"command": "product", "d": args.d, "report": rep.to_json()}
    passed = rep.is_extension and rep.extension_size == 6 + 2 * args.d
    passed = passed and rep.hidden_fraction >= Fraction(1, 9)
    if args.d >= 1:
        coord = P.dim + args.d if args.coord is None else args.coord
        lemma = verify_slice_lemma(Qd, power_prism(P, args.d - 1), coord)
        doc["slice_lemma"] = dict(lemma.to_json(), coord=coord, tight=list(lemma.tight))
        passed = passed and all(lemma.inequality_holds) and all(lemma.slices_are_extensions)
    doc["status"] = "ok" if passed else "failed"
    if args.emit_polytope:
        doc["extension"] = io.vpolytope_to_json(hull(Qd.vertices)[0])
    return (OK if passed else FAILED), doc


def cmd_gallery(args):
    if args.name == "hexagon":
        P, Q = build_hexagon_prism_extension()
        expect_q, expect_p = 5, 6
    else:
        if args.d is None:
            raise _Usage("gallery cross-polytope needs --d")
        P, Q = build_cross_polytope_extension(args.d)
        expect_q, expect_p = 2 * args.d, 2 ** args.d
    hidden = hidden_vertices(Q, P)
    sizes = {"extension_size": size(Q), "projection_size": size(project(Q, P.dim))}
    passed = sizes == {"extension_size": expect_q, "projection_size": expect_p} and not hidden
    doc = {
        "command": "gallery",
        "name": args.name,
        "status": "ok" if passed else "failed",
        **sizes,
        "hidden": hidden,
        "target": io.vpolytope_to_json(P),
        "extension": io.vpolytope_to_json(Q),
    }
    if args.d is not None:
        doc["d"] = args.d
    return (OK if passed else FAILED), doc


# --- parser ---------------------------------------------------------------


def _input_args(p, *names):
    if not names:
        p.add_argument("input", nargs="?", help="polytope JSON file")
        p.add_argument("--in", dest="in_path", help="same as the positional input")
    for n in names:
        p.add_argument(f"--{n}", required=True)


def build_parser():
    parser = argparse.ArgumentParser(prog="polyext", description="Exact polytope extension tools.")
    parser.add_argument("--out", help="write the JSON report here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--out", default=argparse.SUPPRESS, help=argparse.SUPPRESS)
        p.set_defaults(func=func)
        return p

    _input_args(add("hull", cmd_hull, "V-form to canonical H-form"))
    _input_args(add("vertices", cmd_vertices, "H-form to canonical V-form"))
    _input_args(add("gp-check", cmd_gp_check, "general-position check of a heptagon"))
    p = add("build-ext", cmd_build_ext, "six-facet extension of a heptagon")
    _input_args(p)
    p.add_argument("--z1", default="1", help="positive rational lift height")
    _input_args(add("verify-ext", cmd_verify_ext, "check that EXT projects onto TARGET"), "target", "ext")
    _input_args(add("refute", cmd_refute, "refute a hidden-vertex-free certificate"), "target", "cert")
    p = add("product", cmd_product, "prism family over a heptagon extension")
    _input_args(p, "target")
    p.add_argument("--ext", help="extension to use (default: build one)")
    p.add_argument("--d", type=int)
    p.add_argument("--coord", type=int, help="1-based coordinate of the sliced [0,1] factor")
    p.add_argument("--emit-polytope", action="store_true", help="include the product vertices")
    p = add("gallery", cmd_gallery, "built-in examples")
    p.add_argument("name", choices=["cross-polytope", "hexagon"])
    p.add_argument("--d", type=int)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return OK if exc.code == 0 else BAD_INPUT
    try:
        code, doc = args.func(args)
    except (_Usage, InputError, OSError) as exc:
        _diag(str(exc))
        code, doc = BAD_INPUT, {"command": args.command, "status": "bad_input",
                                "error": type(exc).__name__}
    except PolyextError as exc:
        _diag(str(exc))
        code, doc = FAILED, {"command": args.command, "status": "failed",
                             "error": type(exc).__name__}
    text = io.dumps(doc)
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
