"""Pure-Python double-description inner loops.

Reference implementation and fallback for the compiled ``_ddkernel``.
Both modules expose the same two functions with identical results.
Zero sets are Python ints used as bitsets over constraint indices.
"""

from math import gcd as _gcd


def adjacent_pairs(pos, neg, masks, threshold):
    """Pairs ``(p, n)`` from ``pos`` x ``neg`` whose rays are adjacent.

    Uses the combinatorial test: the common zero set must hold at least
    ``threshold`` constraints and lie in no third ray's zero set.
    """
    out = []
    for p in pos:
        mp = masks[p]
        for n in neg:
            common = mp & masks[n]
            if common.bit_count() < threshold:
                continue
            hits = 0
            for m in masks:
                if m & common == common:
                    hits += 1
                    if hits > 2:
                        break
            if hits == 2:
                out.append((p, n))
    return out


def combine(p, n, sp, sn):
    """Primitive form of ``sp*n - sn*p`` (sp > 0 > sn): a ray on the hyperplane."""
    vec = [sp * b - sn * a for a, b in zip(p, n)]
    g = 0
    for x in vec:
        if x:
            g = _gcd(g, x)
            if g == 1:
                return tuple(vec)
    if g > 1:
        return tuple(x // g for x in vec)
    return tuple(vec)

