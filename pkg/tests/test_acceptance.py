"""One test per acceptance criterion, at the stated tolerance."""
import random
import time
from fractions import Fraction


from grapes import (
    CONTRACTIBLE,
    ComplexKind,
    Exhaustive,
    Graph,
    HomotopyType,
    IntervalSet,
    Multidigraph,
    SimplicialComplex,
    build,
    dominance_complex,
    dominates,
    edge_cover_complex,
    edge_dominance_complex,
    family_strategy,
    forest_invariants,
    homotopy_type,
    independence_complex,
    interval_order_complex,
    interval_overlap_graph,
    invariants,
    matching_complex,
    oriented_forest_complex,
    reduce_doscremo,
    reduced_homology,
    verify,
)
from grapes.engine import iter_splits
from grapes.generators import random_forest, random_interval_set, random_multidiforest
from grapes.simplicial import cross_polytope_boundary, deletion, link, relabel

FOREST_KINDS = (
    ComplexKind.INDEPENDENCE,
    ComplexKind.DOMINANCE,
    ComplexKind.MATCHING,
    ComplexKind.EDGE_COVER,
    ComplexKind.EDGE_DOMINANCE,
)


def _forests(count=200, seed=20240611):
    rng = random.Random(seed)
    return [random_forest(rng, rng.randint(1, 12)) for _ in range(count)]


FORESTS = _forests()


def _facets(*faces):
    return {frozenset(f) for f in faces}


def _certified(kind, source):
    cx = build(kind, source)
    t_family, _ = homotopy_type(cx, family_strategy(kind, source))
    t_exhaustive, _ = homotopy_type(cx, Exhaustive())
    return cx, t_family, t_exhaustive


def test_c01_oriented_forest_example(record_criterion):
    record_criterion("1  oriented-forest example is S^2 v S^1, with F2 and F3 as in the figures")
    start = time.perf_counter()
    F = Multidigraph.from_pairs(
        [("a", "c"), ("b", "c"), ("c", "d"), ("d", "c"), ("d", "e"), ("e", "d"), ("f", "e"), ("g", "e")]
    )
    kind = ComplexKind.ORIENTED_FOREST
    cx = oriented_forest_complex(F)
    htype, trace = homotopy_type(cx, family_strategy(kind, F))
    assert str(htype) == "S^2 v S^1"
    assert htype == HomotopyType.wedge(2, 1)
    assert verify(cx, htype)

    # first step: d->c dominates a->c, so OF(F) ~ OF(F1) v ΣOF(F2)
    first = next(iter_splits(trace))
    assert (first.a, first.b) == ("d>c#0", "a>c#0")
    assert dominates(cx, "d>c#0", "a>c#0")

    # OF(F2): the square path f->e, e->d, g->e plus the isolated point d->e
    fig_f2 = _facets({"f>e#0", "e>d#0"}, {"e>d#0", "g>e#0"}, {"d>e#0"})
    of_f2 = link(cx, "d>c#0")
    assert set(of_f2.facets) == fig_f2
    F2 = Multidigraph.from_pairs([("d", "e"), ("e", "d"), ("f", "e"), ("g", "e")])
    assert set(oriented_forest_complex(F2).facets) == fig_f2
    t2, _ = homotopy_type(of_f2)
    assert t2 == HomotopyType.sphere(0) and verify(of_f2, t2)

    # OF(F3): the 4-cycle c->d, f->e, e->d, g->e with d->e coned on c->d
    fig_f3 = _facets(
        {"d>e#0", "c>d#0"}, {"c>d#0", "f>e#0"}, {"f>e#0", "e>d#0"},
        {"e>d#0", "g>e#0"}, {"g>e#0", "c>d#0"},
    )
    of_f1 = deletion(cx, "d>c#0")
    # a->c and b->c dominate one another; either order reaches F3
    assert dominates(of_f1, "a>c#0", "b>c#0") and dominates(of_f1, "b>c#0", "a>c#0")
    of_f3 = link(of_f1, "a>c#0")
    assert set(of_f3.facets) == fig_f3
    assert set(link(of_f1, "b>c#0").facets) == fig_f3
    F3 = Multidigraph.from_pairs([("c", "d"), ("d", "e"), ("e", "d"), ("f", "e"), ("g", "e")])
    assert set(oriented_forest_complex(F3).facets) == fig_f3
    t3, _ = homotopy_type(of_f3)
    assert t3 == HomotopyType.sphere(1) and verify(of_f3, t3)
    assert time.perf_counter() - start < 1.0


def test_c02_matching_example(record_criterion):
    record_criterion("2  matching-complex example is S^1 v S^0 with the figure's facets")
    start = time.perf_counter()
    F = Graph.from_edges([("a", "c"), ("b", "c"), ("c", "d"), ("d", "e"), ("d", "f")])
    cx = matching_complex(F)
    # 4-cycle ac-de-bc-df-ac plus the isolated point cd
    assert set(cx.facets) == _facets(
        {"{a,c}", "{d,e}"}, {"{d,e}", "{b,c}"}, {"{b,c}", "{d,f}"}, {"{d,f}", "{a,c}"}, {"{c,d}"}
    )
    htype, _ = homotopy_type(cx, family_strategy(ComplexKind.MATCHING, F))
    assert str(htype) == "S^1 v S^0"
    assert verify(cx, htype)
    assert time.perf_counter() - start < 1.0


def test_c03_interval_example(record_criterion):
    record_criterion("3  interval-order example is S^1 v S^0")
    start = time.perf_counter()
    X = IntervalSet((("I02", 0, 2), ("I06", 0, 6), ("I13", 1, 3), ("I47", 4, 7), ("I58", 5, 8)))
    cx = interval_order_complex(X)
    htype, _ = homotopy_type(cx, family_strategy(ComplexKind.INTERVAL_ORDER, X))
    assert str(htype) == "S^1 v S^0"
    assert verify(cx, htype)
    assert time.perf_counter() - start < 1.0


def test_c04_random_forest_suite(record_criterion):
    record_criterion("4  200 random forests x 5 kinds: both strategies certify, agree, verify")
    start = time.perf_counter()
    assert len(FORESTS) >= 200
    assert {len(F.vertices) for F in FORESTS} <= set(range(1, 13))
    for F in FORESTS:
        for kind in FOREST_KINDS:
            cx, t_family, t_exhaustive = _certified(kind, F)
            assert t_family == t_exhaustive, (kind, F)
            assert verify(cx, t_family), (kind, F)
    assert time.perf_counter() - start < 30.0


def test_c05_dimension_formulas(record_criterion):
    record_criterion("5  Ind, Dom, EC, ED dimension formulas hold exactly")
    for F in FORESTS:
        inv = invariants(F)
        n_v, n_e = len(F.vertices), len(F.edges)

        t_ind, _ = homotopy_type(independence_complex(F), family_strategy(ComplexKind.INDEPENDENCE, F))
        if not t_ind.is_contractible:
            assert inv.i_dom == inv.gamma
            assert t_ind == HomotopyType.sphere(inv.i_dom - 1)

        t_dom, _ = homotopy_type(dominance_complex(F), family_strategy(ComplexKind.DOMINANCE, F))
        assert inv.alpha0 == inv.beta1
        assert t_dom == HomotopyType.sphere(inv.alpha0 - 1)

        t_ec, _ = homotopy_type(edge_cover_complex(F), family_strategy(ComplexKind.EDGE_COVER, F))
        if not F.isolated_vertices():
            assert inv.kappa == n_v - n_e
            if t_ind.is_contractible:
                assert t_ec.is_contractible
            else:
                assert t_ec == HomotopyType.sphere(n_e - n_v + inv.i_dom - 1)
                assert t_ec == HomotopyType.sphere(inv.i_dom - inv.kappa - 1)

        t_ed, _ = homotopy_type(edge_dominance_complex(F), family_strategy(ComplexKind.EDGE_DOMINANCE, F))
        assert t_ed == HomotopyType.sphere(n_e - inv.alpha0 - 1)


def _cross_polytope_labels(F):
    """Label map sending each remaining edge {u<w} to the i-th antipodal pair."""
    mapping = {}
    for i, (u, w) in enumerate(F.sorted_edges()):
        mapping[u], mapping[w] = f"p{i}", f"n{i}"
    return mapping


def test_c06_cross_polytope_collapse(record_criterion):
    record_criterion("6  doscremo gives r = alpha0 = beta1 and Dom(F') is the r-cross-polytope boundary")
    for F in FORESTS:
        inv = invariants(F)
        reduced, r = reduce_doscremo(F)
        assert r == inv.alpha0 == inv.beta1
        assert all(reduced.degree(v) <= 1 for v in reduced.vertices)
        dom = dominance_complex(reduced)
        mapping = _cross_polytope_labels(reduced)
        # isolated vertices never enter a face of Dom, so only edge endpoints matter
        assert dom.vertices == set(mapping)
        assert set(relabel(dom, mapping).facets) == set(cross_polytope_boundary(r).facets)
        profile = reduced_homology(dominance_complex(F))
        assert profile.reduced_betti == {r - 1: 1}
        assert not profile.torsion
        assert reduce_doscremo(F, reverse=True)[1] == r


def test_c07_koenig(record_criterion):
    record_criterion("7  alpha0 = beta1 by brute force and by the linear-time forest route")
    for F in FORESTS:
        inv = invariants(F)
        fast = forest_invariants(F)
        assert inv.alpha0 == inv.beta1 == fast["alpha0"] == fast["beta1"]
        assert fast["gamma"] == inv.gamma


def _parallel_groups(M):
    groups = {}
    for s, t, n in M.sorted_arcs():
        if s != t:
            groups.setdefault((s, t), []).append(f"{s}>{t}#{n}")
    return [g for g in groups.values() if len(g) > 1]


def test_c08_random_multidiforests(record_criterion):
    record_criterion("8  100 random multidiforests: OF certified, verified, parallel arcs dominate each other")
    rng = random.Random(8080)
    seen_parallel = 0
    kind = ComplexKind.ORIENTED_FOREST
    for _ in range(100):
        M = random_multidiforest(rng, max_arcs=8)
        assert len(M.arcs) <= 8
        cx = oriented_forest_complex(M)
        htype, _ = homotopy_type(cx, family_strategy(kind, M))
        assert verify(cx, htype), M
        for group in _parallel_groups(M):
            seen_parallel += 1
            for x in group:
                for y in group:
                    if x != y:
                        assert dominates(cx, x, y)
    assert seen_parallel > 0


def test_c09_random_interval_sets(record_criterion):
    record_criterion("9  100 random interval sets: certified, verified, equal to Ind of the overlap graph")
    rng = random.Random(9090)
    kind = ComplexKind.INTERVAL_ORDER
    for _ in range(100):
        X = random_interval_set(rng, max_intervals=8)
        assert len(X.intervals) <= 8
        assert all(isinstance(iv.lo, Fraction) for iv in X.intervals)
        cx = interval_order_complex(X)
        htype, _ = homotopy_type(cx, family_strategy(kind, X))
        assert verify(cx, htype), X
        ind = independence_complex(interval_overlap_graph(X))
        assert cx.facets == ind.facets and cx.ground == ind.ground


def test_c10_degenerate_conventions(record_criterion):
    record_criterion("10 empty complex contractible, {empty} is S^-1, EC and ED degenerate cases")
    t, _ = homotopy_type(SimplicialComplex())
    assert t == CONTRACTIBLE and str(t) == "contractible"
    t, _ = homotopy_type(SimplicialComplex([frozenset()]))
    assert str(t) == "S^-1"

    with_isolated = Graph.from_edges([("a", "b"), ("b", "c")], ["z"])
    ec = edge_cover_complex(with_isolated)
    assert ec.is_empty()
    t, _ = homotopy_type(ec, family_strategy(ComplexKind.EDGE_COVER, with_isolated))
    assert str(t) == "contractible"

    matching = Graph.from_edges([("a", "b"), ("c", "d"), ("e", "f")], ["g", "h"])
    ed = edge_dominance_complex(matching)
    assert ed.is_minus_one_sphere()
    t, _ = homotopy_type(ed, family_strategy(ComplexKind.EDGE_DOMINANCE, matching))
    assert str(t) == "S^-1"
    assert verify(ed, t)
