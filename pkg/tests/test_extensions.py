import itertools
import random
from fractions import Fraction

import pytest

from oracles import (
    affine_dim,
    brute_facets,
    brute_vertices,
    cross,
    meet,
    on_line,
    parallel,
    random_gp_heptagons,
)
from polyext.errors import (
    DimensionMismatch,
    NotAnExtension,
    NotGeneralPosition,
)
from polyext.extensions import (
    CaseDWitness,
    CoincidingPairOnEdge,
    CollinearIntersections,
    ConcurrentLines,
    FewVertices,
    HiddenVertexFound,
    Lemma1Violation,
    NotExtension,
    ParallelChords,
    PrismLemma2Witness,
    TooManyFacets,
    case_d_labels,
    extension_report,
    find_case_d_witness,
    find_lemma1_violation,
    find_prism_witness,
    hidden_vertices,
    is_extension,
    refute_hidden_free,
    triangular_prism_labels,
)
from polyext.heptagon import (
    Heptagon,
    build_cross_polytope_extension,
    build_heptagon_extension,
    build_hexagon_prism_extension,
    check_general_position,
    cross_polytope,
)
from polyext.kernel import matrix_rank
from polyext.polytope import hull, project, size
from polyext.products import prism

HEPTAGON = [(1, 5), (2, 2), (8, 1), (11, 4), (10, 9), (6, 11), (2, 9)]
TYPE_D = [(0, 0, 0), (4, 0, 0), (4, 4, 0), (0, 4, 0), (1, 1, 2), (3, 1, 2), (2, 3, 4)]
GP = random_gp_heptagons(16, seed=23)


def fr(p):
    return tuple(Fraction(x) for x in p)


def hept_prism(pts):
    return prism(Heptagon(pts).polytope)


def d_shadow_certificates(count, seed=1):
    """Hidden-free six-facet certificates: linear images of a type-D polytope
    whose shadow on the first two coordinates is a heptagon."""
    rng = random.Random(seed)
    base = [fr(p) for p in TYPE_D]
    out = []
    while len(out) < count:
        M = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)]
        if matrix_rank(M) != 3:
            continue
        img = [tuple(sum(M[i][j] * p[j] for j in range(3)) for i in range(3)) for p in base]
        Q = hull(img)[0]
        shadow = project(Q, 2)
        if len(shadow) == 7 and len({q[:2] for q in Q.vertices}) == 7:
            out.append((Heptagon.from_points(shadow.vertices), Q))
    return out


# --- predicates --------------------------------------------------------------


def test_is_extension_examples():
    P = Heptagon(HEPTAGON).polytope
    assert is_extension(hept_prism(HEPTAGON), P)
    cube = hull([(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)])[0]
    assert not is_extension(cube, hull([(0, 0), (1, 0), (0, 1)])[0])
    Pc, Qc = build_cross_polytope_extension(2)
    assert is_extension(Qc, cross_polytope(2))
    with pytest.raises(DimensionMismatch):
        is_extension(P, cube)


def test_hidden_vertices_examples():
    P = Heptagon(HEPTAGON).polytope
    assert hidden_vertices(hept_prism(HEPTAGON), P) == []
    ext = build_heptagon_extension(Heptagon(HEPTAGON))
    assert hidden_vertices(ext.Q_v, P) == [ext.Q_v.vertices.index(ext.apex)]
    Pc, Qc = build_cross_polytope_extension(3)
    assert hidden_vertices(Qc, Pc) == []
    with pytest.raises(NotAnExtension):
        hidden_vertices(hept_prism(HEPTAGON[:6] + [(3, 9)]), P)


@pytest.mark.parametrize("pts", GP[:6])
def test_hidden_vertices_by_membership(pts):
    ext = build_heptagon_extension(Heptagon(pts))
    verts = set(brute_vertices(pts))
    brute = [i for i, w in enumerate(ext.Q_v.vertices) if w[:2] not in verts]
    assert hidden_vertices(ext.Q_v, ext.base.polytope) == brute


def test_extension_report_examples():
    P = Heptagon(HEPTAGON).polytope
    rep = extension_report(hept_prism(HEPTAGON), P)
    assert rep.to_json() == {
        "is_extension": True,
        "extension_size": 9,
        "target_size": 7,
        "vertex_count": 14,
        "hidden": [],
        "hidden_fraction": "0",
    }
    ext = build_heptagon_extension(Heptagon(HEPTAGON))
    rep = extension_report(ext.Q_v, P)
    assert (rep.is_extension, rep.extension_size, rep.vertex_count) == (True, 6, 8)
    assert len(rep.hidden) == 1 and rep.hidden_fraction == Fraction(1, 8)
    cube = hull([(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)])[0]
    assert not extension_report(cube, hull([(0, 0), (1, 0), (0, 1)])[0]).is_extension


def test_five_facet_polytopes_have_at_most_six_vertices():
    P, Q = build_hexagon_prism_extension()
    assert size(Q) == 5 and len(Q) == 6
    rng = random.Random(3)
    seen = 0
    for _ in range(400):
        d = rng.randint(2, 4)
        pts = [tuple(rng.randint(-4, 4) for _ in range(d)) for _ in range(rng.randint(d + 1, d + 4))]
        V, H = hull(pts)
        if size(H) == 5:
            seen += 1
            assert len(V) <= 6
            for k in range(1, d):
                assert len(project(V, k)) <= 6
    assert seen >= 20


def test_adding_an_interior_point():
    """A new point over the interior of P never removes a visible vertex,
    and is hidden exactly when it becomes a vertex."""
    for pts in GP[:5]:
        ext = build_heptagon_extension(Heptagon(pts))
        P = ext.base.polytope
        Q = ext.Q_v
        cx = sum(Fraction(p[0]) for p in pts) / 7
        cy = sum(Fraction(p[1]) for p in pts) / 7
        before = set(hidden_vertices(Q, P))
        visible = {w for i, w in enumerate(Q.vertices) if i not in before}
        for z in (-5, Fraction(1, 2), 9):
            q = (cx, cy, Fraction(z))
            Q2 = hull(Q.vertices + (q,))[0]
            after = {Q2.vertices[i] for i in hidden_vertices(Q2, P)}
            assert visible <= set(Q2.vertices)
            assert after <= {Q.vertices[i] for i in before} | {q}
            assert (q in after) == (q in Q2.vertices)


# --- witness validation by brute force ------------------------------------------


def coinciding(proj, idx):
    return sum(1 for a, b in itertools.combinations(idx, 2) if proj[a] == proj[b])


def validate_prism_witness(Q, w: PrismLemma2Witness):
    pts = [Q.vertices[i] for i in w.indices]
    facets = list(brute_facets(pts).values())
    assert len(facets) == 5
    tris = [f for f in facets if len(f) == 3]
    quads = [f for f in facets if len(f) == 4]
    assert len(tris) == 2 and len(quads) == 3 and not tris[0] & tris[1]
    assert {frozenset(pts[0::2]), frozenset(pts[1::2])} == set(tris)
    for a in (0, 2, 4):  # lateral edges w1w2, w3w4, w5w6 lie in two quadrilaterals
        assert sum(1 for f in quads if pts[a] in f and pts[a + 1] in f) == 2
    proj = [p[:2] for p in pts]
    assert coinciding(proj, range(6)) <= 1
    sub = w.sub
    if isinstance(sub, ParallelChords):
        assert parallel(*sub.points)
    elif isinstance(sub, ConcurrentLines):
        lines = [(proj[0], proj[1]), (proj[2], proj[3]), (proj[4], proj[5])]
        assert all(on_line(a, b, sub.common) for a, b in lines)
    else:
        assert isinstance(sub, CoincidingPairOnEdge)
        a, b = sub.pair
        assert Q.vertices[a][:2] == Q.vertices[b][:2]
        face = {Q.vertices[i] for i in sub.face}
        assert face in [set(f) for f in quads] and Q.vertices[a] in face and Q.vertices[b] in face


def validate_case_d_witness(Q, w: CaseDWitness):
    facets = list(brute_facets(Q.vertices).values())
    pts = [Q.vertices[i] for i in w.indices]
    assert frozenset(pts[i] for i in (0, 1, 4)) in facets
    assert frozenset(pts[i] for i in (2, 3, 5, 6)) in facets
    u = [p[:2] for p in pts]
    if isinstance(w.sub, ParallelChords):
        assert parallel(*w.sub.points)
    else:
        assert isinstance(w.sub, CollinearIntersections)
        pairs = (((0, 1), (2, 3)), ((1, 4), (3, 5)), ((2, 6), (0, 4)))
        xs = [meet(u[a], u[b], u[c], u[d]) for (a, b), (c, d) in pairs]
        assert tuple(xs) == w.sub.intersections and cross(*xs) == 0


def test_lemma1_scanner():
    # a vertical edge plus two more vertices, all on the plane y = 0
    pts = [(0, 0, 0), (0, 0, 1), (2, 0, 0), (1, 0, 3), (1, 3, 0)]
    Q = hull(pts)[0]
    w = find_lemma1_violation(Q, 2)
    assert isinstance(w, Lemma1Violation)
    proj = [v[:2] for v in Q.vertices]
    assert coinciding(proj, w.indices) == 1
    assert affine_dim([Q.vertices[i] for i in w.indices]) <= 2
    first = next(
        s
        for s in itertools.combinations(range(len(proj)), 4)
        if coinciding(proj, s) == 1 and affine_dim([Q.vertices[i] for i in s]) <= 2
    )
    assert w.indices == first


def test_lemma1_scanner_finds_nothing_on_generic_lift():
    ext = build_heptagon_extension(Heptagon(GP[0]))
    assert find_lemma1_violation(ext.Q_v, 2) is None


def test_triangular_prism_recognition():
    pts = [fr(p) for p in [(0, 0, 0), (0, 0, 1), (3, 0, 0), (3, 0, 1), (0, 2, 0), (0, 2, 1)]]
    labels, facets = triangular_prism_labels(pts)
    lab = [pts[i] for i in labels]
    assert {frozenset(lab[0::2]), frozenset(lab[1::2])} == {frozenset(pts[0::2]), frozenset(pts[1::2])}
    octa = [fr(p) for p in [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]]
    assert triangular_prism_labels(octa) is None


def test_prism_scanner_on_vertical_prism():
    # vertical edges coincide pairwise, so only subsets with one pair qualify
    pts = [(0, 0, 0), (0, 0, 1), (4, 0, 0), (4, 0, 1), (0, 4, 0), (0, 4, 1), (1, 1, 3)]
    Q = hull(pts)[0]
    w = find_prism_witness(Q, 2)
    assert w is None or isinstance(w, PrismLemma2Witness)
    if w is not None:
        validate_prism_witness(Q, w)


D_SHADOWS = d_shadow_certificates(6)


@pytest.mark.parametrize("P,Q", D_SHADOWS)
def test_hidden_free_type_d_certificates(P, Q):
    """Hidden-free six-facet extensions of heptagons exist only off general position."""
    gp = check_general_position(P)
    assert not gp.in_general_position
    assert size(Q) == 6 and hidden_vertices(Q, P.polytope) == []
    with pytest.raises(NotGeneralPosition):
        refute_hidden_free(P, Q)
    assert case_d_labels(Q) is not None
    witnesses = [f(Q, 2) for f in (find_lemma1_violation, find_prism_witness, find_case_d_witness)]
    assert any(witnesses)
    if witnesses[1] is not None:
        validate_prism_witness(Q, witnesses[1])
    if witnesses[2] is not None:
        validate_case_d_witness(Q, witnesses[2])
        sub = witnesses[2].sub
        cond = 1 if isinstance(sub, ParallelChords) else 3
        assert gp.count(cond) > 0


# --- refuter -------------------------------------------------------------------


def refuter_corpus():
    out = []
    for pts in GP:
        H = Heptagon(pts)
        ext = build_heptagon_extension(H)
        out.append((H, ext.Q_v))
        out.append((H, hept_prism(pts)))
    rng = random.Random(4)
    for pts in GP[:8]:
        H = Heptagon(pts)
        six = rng.sample(list(H.vertices), 6)
        simplex = [p + tuple(int(i == j) for j in range(5)) for i, p in enumerate(six[:5])]
        simplex.append(six[5] + (0,) * 5)
        out.append((H, hull(simplex)[0]))
        ext = build_heptagon_extension(H, z1=Fraction(rng.randint(1, 9), rng.randint(1, 4)))
        out.append((H, ext.Q_v))
        moved = list(ext.Q_v.vertices)
        moved[0] = (moved[0][0] + 1,) + moved[0][1:]
        out.append((H, hull(moved)[0]))
    return out


def validate_witness(P, Q, w):
    V = hull(Q.vertices)[0]
    target = set(brute_vertices(P.vertices))
    if isinstance(w, FewVertices):
        assert w.count == len(V) < 7
    elif isinstance(w, NotExtension):
        proj = {v[:2] for v in V.vertices}
        assert set(brute_vertices(list(proj))) != target
    elif isinstance(w, TooManyFacets):
        assert w.size == len(brute_facets(V.vertices)) > 6
    elif isinstance(w, HiddenVertexFound):
        assert V.vertices[w.index][:2] not in target
        assert all(v[:2] in target for v in V.vertices[: w.index])
    elif isinstance(w, PrismLemma2Witness):
        validate_prism_witness(V, w)
    elif isinstance(w, CaseDWitness):
        validate_case_d_witness(V, w)
    else:
        assert isinstance(w, Lemma1Violation)
        assert affine_dim([V.vertices[i] for i in w.indices]) <= 2


def test_refuter_corpus():
    corpus = refuter_corpus()
    assert len(corpus) >= 50
    kinds = set()
    for P, Q in corpus:
        w = refute_hidden_free(P, Q)
        validate_witness(P, Q, w)
        kinds.add(type(w).__name__)
    assert {"HiddenVertexFound", "TooManyFacets", "FewVertices", "NotExtension"} <= kinds


def test_refuter_examples():
    H = Heptagon(GP[0])
    ext = build_heptagon_extension(H)
    assert refute_hidden_free(H, ext.Q_v) == HiddenVertexFound(ext.Q_v.vertices.index(ext.apex))
    assert refute_hidden_free(H, hept_prism(GP[0])) == TooManyFacets(9)
    simplex = [p + tuple(int(i == j) for j in range(5)) for i, p in enumerate(H.vertices[:5])]
    simplex.append(H.vertices[5] + (0,) * 5)
    assert refute_hidden_free(H, hull(simplex)[0]) == FewVertices(6)


def test_refuter_on_heptagon_outside_general_position():
    # counting stages apply to every convex heptagon
    H = Heptagon(HEPTAGON)
    assert refute_hidden_free(H, hept_prism(HEPTAGON)) == TooManyFacets(9)
    assert refute_hidden_free(HEPTAGON, build_heptagon_extension(H).Q_v) == HiddenVertexFound(3)


def test_certificate_from_h_form():
    from polyext.polytope import h_of, vertices_of

    H = Heptagon(GP[1])
    Q = build_heptagon_extension(H).Q_v
    assert refute_hidden_free(H, vertices_of(h_of(Q))) == refute_hidden_free(H, Q)

