"""Time the double-description loops with the compiled and pure-Python backends.

    python benchmarks/bench_kernels.py [--repeat N]

Each workload runs with cleared caches so every hull is recomputed.
"""

import argparse
import math
import random
import time

from polyext import _ddkernel_py, dd, polytope
from polyext.heptagon import Heptagon, build_heptagon_extension
from polyext.products import product_family

try:
    from polyext import _ddkernel
except ImportError:
    _ddkernel = None

HEPTAGON = [(1, 5), (2, 2), (8, 1), (11, 4), (10, 9), (6, 11), (2, 9)]


def sphere_hull(dim, n, radius=1000):
    """Integer points near a sphere: every point is a vertex and facets are many."""
    rng = random.Random(dim)
    pts = []
    for _ in range(n):
        v = [rng.gauss(0, 1) for _ in range(dim)]
        r = math.sqrt(sum(x * x for x in v))
        pts.append(tuple(round(radius * x / r) for x in v))
    return lambda: polytope.hull(pts)


def heptagon_family(d):
    def run():
        P = Heptagon(HEPTAGON)
        Q = build_heptagon_extension(P).Q_v
        Qd, Pd = product_family(Q, P.polytope, d)
        polytope.hull(Qd.vertices)
        polytope.hull(Pd.vertices)

    return run


WORKLOADS = {
    "sphere dim 4 (60 pts)": sphere_hull(4, 60),
    "sphere dim 5 (40 pts)": sphere_hull(5, 40),
    "sphere dim 6 (30 pts)": sphere_hull(6, 30),
    "sphere dim 7 (24 pts)": sphere_hull(7, 24),
    "heptagon family d=3": heptagon_family(3),
    "heptagon family d=4": heptagon_family(4),
}


def use(module):
    dd.adjacent_pairs = module.adjacent_pairs
    dd.combine = module.combine


def timed(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        polytope._hull_cached.cache_clear()
        polytope._vertices_cached.cache_clear()
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    backends = [("python", _ddkernel_py)] + ([("cython", _ddkernel)] if _ddkernel else [])
    print(f"{'workload':28s}" + "".join(f"{name:>12s}" for name, _ in backends) + "     speedup")
    for label, fn in WORKLOADS.items():
        times = []
        for _, module in backends:
            use(module)
            times.append(timed(fn, args.repeat))
        row = f"{label:28s}" + "".join(f"{t:11.3f}s" for t in times)
        if len(times) == 2:
            row += f"{times[0] / times[1]:11.2f}x"
        print(row)


if __name__ == "__main__":
    main()
