"""Write the golden CLI reports under tests/data.

    python tools/freeze_golden.py

The tests recheck every frozen value with independent brute-force code,
so regenerating is only needed after a deliberate format change.
"""

import json
import pathlib

from polyext import cli

DATA = pathlib.Path(__file__).resolve().parents[1] / "tests" / "data"
HEPTAGON = {"dim": 2, "vertices": [[1, 5], [2, 2], [8, 1], [11, 4], [10, 9], [6, 11], [2, 9]]}

RUNS = {
    "heptagon_gp_check.json": ["gp-check", "{heptagon}"],
    "heptagon_build_ext.json": ["build-ext", "{heptagon}"],
}


def main():
    heptagon = DATA / "heptagon.json"
    heptagon.write_text(json.dumps(HEPTAGON) + "\n")
    for name, argv in RUNS.items():
        argv = [a.format(heptagon=heptagon) for a in argv]
        cli.main(argv + ["--out", str(DATA / name)])
        print(f"wrote {DATA / name}")


if __name__ == "__main__":
    main()
