"""Double-description method for polyhedral cones over the integers.

:func:`cone_generators` turns ``{y : A y >= 0, E y = 0}`` into a lineality
basis plus extreme rays.  Constraints are inserted one at a time in the
order given; adjacency of rays uses the combinatorial zero-set test.
"""

from __future__ import annotations

from operator import mul

from ._kernels import adjacent_pairs, combine
from .kernel import primitive


def _dot(a, b):
    return sum(map(mul, a, b))


def _eliminate(vecs, vals, l0, s0):
    """Make every vector orthogonal to the constraint using pivot ``l0``."""
    out = []
    for v, sv in zip(vecs, vals):
        if sv == 0:
            out.append(v)
        else:
            out.append(primitive([s0 * x - sv * y for x, y in zip(v, l0)]))
    return out


def cone_generators(inequalities, equations, dim):
    """Generators of the cone cut out by integer constraint rows.

    Each row ``a`` in ``inequalities`` means ``a . y >= 0``; each row in
    ``equations`` means ``a . y = 0``.  Returns ``(lineality, rays)``, both
    lists of primitive integer tuples; rays are the extreme rays of the cone
    modulo its lineality space.
    """
    lin = [tuple(int(i == j) for j in range(dim)) for i in range(dim)]
    space = dim

    for e in equations:
        vals = [_dot(e, l) for l in lin]
        k = next((i for i, v in enumerate(vals) if v != 0), None)
        if k is None:
            continue
        l0 = lin.pop(k)
        s0 = vals.pop(k)
        lin = _eliminate(lin, vals, l0, s0)
        space -= 1

    rays = []
    masks = []
    for j, a in enumerate(inequalities):
        bit = 1 << j
        vals = [_dot(a, l) for l in lin]
        k = next((i for i, v in enumerate(vals) if v != 0), None)
        if k is not None:
            # the new constraint splits the lineality space
            l0 = lin.pop(k)
            s0 = vals.pop(k)
            if s0 < 0:
                l0 = tuple(-x for x in l0)
                s0 = -s0
            lin = _eliminate(lin, vals, l0, s0)
            rvals = [_dot(a, r) for r in rays]
            rays = _eliminate(rays, rvals, l0, s0)
            masks = [m | bit for m in masks]
            rays.append(l0)
            masks.append(bit - 1)
            continue

        vals = [_dot(a, r) for r in rays]
        pos = [i for i, v in enumerate(vals) if v > 0]
        neg = [i for i, v in enumerate(vals) if v < 0]
        if not neg:
            masks = [m | bit if v == 0 else m for m, v in zip(masks, vals)]
            continue
        zero = [i for i, v in enumerate(vals) if v == 0]
        threshold = space - len(lin) - 2
        pairs = adjacent_pairs(pos, neg, masks, max(threshold, 0))
        new_rays = [rays[i] for i in pos] + [rays[i] for i in zero]
        new_masks = [masks[i] for i in pos] + [masks[i] | bit for i in zero]
        for p, n in pairs:
            new_rays.append(combine(rays[p], rays[n], vals[p], vals[n]))
            new_masks.append((masks[p] & masks[n]) | bit)
        rays, masks = new_rays, new_masks

    return lin, rays
