"""Regenerate src/polyext/data/types3d.json.

Each of the four combinatorial types of 3-polytopes with six facets and
at least seven vertices gets a small rational realization; its hull and
vertex-facet incidence are computed exactly and stored as facet lists.
The expected facet-size profile read off each drawing is checked first.

    python tools/derive_reference_types.py [--check]
"""

import argparse
import json
import pathlib
import sys

from polyext.polytope import hull, incidence

# cube
A = [(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)]
# triangular prism with one corner cut off
B = [(0, 0, 0), (4, 0, 0), (0, 4, 0), (0, 0, 4), (0, 4, 4), (3, 0, 4), (4, 0, 3), (3, 1, 4)]
# square pyramid with one base corner cut off
C = [(0, 0, 0), (4, 0, 0), (0, 4, 0), (2, 2, 4), (4, 3, 0), (3, 4, 0), ("7/2", "7/2", 1)]
# square base, triangle on top: one top corner is over the middle of an edge
D = [(0, 0, 0), (4, 0, 0), (4, 4, 0), (0, 4, 0), (1, 1, 2), (3, 1, 2), (2, 3, 4)]

REALIZATIONS = {"A": A, "B": B, "C": C, "D": D}
PROFILES = {
    "A": [4, 4, 4, 4, 4, 4],
    "B": [3, 3, 4, 4, 5, 5],
    "C": [3, 3, 3, 4, 4, 5],
    "D": [3, 3, 4, 4, 4, 4],
}
VERTEX_COUNTS = {"A": 8, "B": 8, "C": 7, "D": 7}

OUT = pathlib.Path(__file__).resolve().parents[1] / "src/polyext/data/types3d.json"


def derive():
    types = {}
    for name, pts in REALIZATIONS.items():
        V, H = hull(pts)
        facets = incidence(V, H).facet_sets
        profile = sorted(len(f) for f in facets)
        if len(V.vertices) != VERTEX_COUNTS[name] or profile != PROFILES[name]:
            raise SystemExit(f"type {name}: realization has profile {profile}")
        types[name] = {
            "vertices": len(V.vertices),
            "facets": sorted(sorted(f) for f in facets),
        }
    return {"types": types}


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--check", action="store_true", help="compare with the stored file")
    args = ap.parse_args(argv)
    text = json.dumps(derive(), indent=1) + "\n"
    if args.check:
        same = OUT.read_text() == text
        print("up to date" if same else "stale")
        return 0 if same else 1
    OUT.write_text(text)
    print(f"wrote {OUT}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
