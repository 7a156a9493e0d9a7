import random
from fractions import Fraction
from itertools import chain, combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grapes.errors import InputError, ResourceError
from grapes.generators import random_forest, random_multidiforest
from grapes.graphs import (
    Graph,
    Interval,
    IntervalSet,
    Multidigraph,
    closed_neighborhood,
    contract_arc,
    forest_invariants,
    interval_overlap_graph,
    invariants,
    is_forest,
    leaves,
    line_dual,
    underlying_graph,
)

PATH3 = Graph.from_edges([("a", "b"), ("b", "c")])
PATH4 = Graph.from_edges([("a", "b"), ("b", "c"), ("c", "d")])
TRIANGLE = Graph.from_edges([("a", "b"), ("b", "c"), ("a", "c")])
# tree of the matching-complex example
MTREE = Graph.from_edges([("a", "c"), ("b", "c"), ("c", "d"), ("d", "e"), ("d", "f")])


def _subsets(xs):
    xs = sorted(xs)
    return chain.from_iterable(combinations(xs, k) for k in range(len(xs) + 1))


def naive_invariants(G):
    """Set-based enumeration, deliberately independent of the bitmask code."""
    V, E = G.vertices, [tuple(e) for e in G.edges]

    def nbhd(S):
        return set(S) | {w for u, w in E if u in S} | {u for u, w in E if w in S}

    dom = [set(S) for S in _subsets(V) if nbhd(S) == set(V)]
    indep = [S for S in dom if not any(u in S and w in S for u, w in E)]
    covers = [S for S in _subsets(V) if all(u in S or w in S for u, w in E)]
    matchings = [
        M for M in _subsets(range(len(E)))
        if len({x for j in M for x in E[j]}) == 2 * len(M)
    ]
    return (
        min(map(len, dom)),
        min(map(len, indep)),
        min(map(len, covers)),
        max(map(len, matchings)),
    )


class TestNeighborhoods:
    def test_center_of_path(self):
        assert closed_neighborhood(PATH3, {"b"}) == {"a", "b", "c"}

    def test_empty_set(self):
        assert closed_neighborhood(MTREE, set()) == frozenset()

    def test_matching_tree(self):
        assert closed_neighborhood(MTREE, {"c"}) == {"a", "b", "c", "d"}

    def test_unknown_vertex(self):
        with pytest.raises(InputError):
            closed_neighborhood(PATH3, {"z"})

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 10**6), st.data())
    def test_monotone_and_extensive(self, seed, data):
        F = random_forest(random.Random(seed), 9)
        verts = F.sorted_vertices()
        T = set(data.draw(st.sets(st.sampled_from(verts))))
        S = set(data.draw(st.sets(st.sampled_from(sorted(T))))) if T else set()
        assert S <= closed_neighborhood(F, S)
        assert closed_neighborhood(F, S) <= closed_neighborhood(F, T)


class TestStructure:
    def test_is_forest(self):
        assert is_forest(PATH3)
        assert not is_forest(TRIANGLE)
        assert is_forest(MTREE)

    def test_leaves(self):
        assert leaves(PATH3) == {"a", "c"}
        assert leaves(Graph(frozenset({"a"}))) == frozenset()
        assert leaves(MTREE) == {"a", "b", "e", "f"}

    def test_rejects_loops(self):
        with pytest.raises(InputError):
            Graph.from_edges([("a", "a")])

    def test_line_dual(self):
        assert line_dual(PATH3) == Graph.from_edges([("{a,b}", "{b,c}")])
        single = line_dual(Graph.from_edges([("a", "b")]))
        assert single.vertices == {"{a,b}"} and not single.edges
        expected = Graph.from_edges(
            [
                ("{a,c}", "{b,c}"), ("{a,c}", "{c,d}"), ("{b,c}", "{c,d}"),
                ("{c,d}", "{d,e}"), ("{c,d}", "{d,f}"), ("{d,e}", "{d,f}"),
            ]
        )
        assert line_dual(MTREE) == expected


class TestInvariants:
    def test_single_edge(self):
        inv = invariants(Graph.from_edges([("a", "b")]))
        assert (inv.gamma, inv.i_dom, inv.alpha0, inv.beta1, inv.kappa) == (1, 1, 1, 1, 1)

    def test_path4(self):
        # frozen from naive_invariants
        inv = invariants(PATH4)
        assert (inv.gamma, inv.i_dom, inv.alpha0, inv.beta1, inv.kappa) == (2, 2, 2, 2, 1)

    def test_matching_tree(self):
        inv = invariants(MTREE)
        assert (inv.alpha0, inv.beta1) == (2, 2)
        # γ and i differ here; Ind of this tree is contractible
        assert (inv.gamma, inv.i_dom) == (2, 3)

    def test_cutoff(self):
        G = Graph(frozenset(f"v{i}" for i in range(21)))
        with pytest.raises(ResourceError):
            invariants(G)
        assert invariants(G, cutoff=21).kappa == 21

    def test_empty_graph(self):
        inv = invariants(Graph())
        assert (inv.gamma, inv.i_dom, inv.alpha0, inv.beta1, inv.kappa) == (0, 0, 0, 0, 0)

    @pytest.mark.parametrize("seed", range(40))
    def test_against_naive_enumeration(self, seed):
        rng = random.Random(seed)
        G = random_forest(rng, rng.randint(1, 9))
        if seed % 3 == 0 and len(G.vertices) >= 3:
            # close a cycle so non-forests are covered too
            u, v = sorted(G.vertices)[:2]
            G = Graph(G.vertices, G.edges | {frozenset((u, v))})
        inv = invariants(G)
        assert (inv.gamma, inv.i_dom, inv.alpha0, inv.beta1) == naive_invariants(G)

    @pytest.mark.parametrize("seed", range(60))
    def test_leaf_stripping_matches_oracle(self, seed):
        rng = random.Random(1000 + seed)
        F = random_forest(rng, rng.randint(1, 14))
        inv = invariants(F)
        fast = forest_invariants(F)
        assert fast == {"alpha0": inv.alpha0, "beta1": inv.beta1, "gamma": inv.gamma}
        assert inv.alpha0 == inv.beta1


class TestMultidigraph:
    def test_dense_indices_enforced(self):
        with pytest.raises(InputError):
            Multidigraph(frozenset(), frozenset({("a", "b", 1)}))

    def test_underlying(self):
        M = Multidigraph.from_pairs([("c", "d"), ("d", "c")])
        assert underlying_graph(M) == Graph.from_edges([("c", "d")])
        loop = underlying_graph(Multidigraph.from_pairs([("u", "u")]))
        assert loop.vertices == {"u"} and not loop.edges

    def test_underlying_of_example_tree(self):
        M = Multidigraph.from_pairs(
            [("a", "c"), ("b", "c"), ("c", "d"), ("d", "c"), ("d", "e"), ("e", "d"), ("f", "e"), ("g", "e")]
        )
        assert underlying_graph(M) == Graph.from_edges(
            [("a", "c"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "f"), ("e", "g")]
        )

    def test_contract_triangle(self):
        G = Multidigraph.from_pairs([("z", "u"), ("z", "x"), ("u", "x")])
        assert contract_arc(G, "z", "u") == Multidigraph(
            frozenset({"u", "x"}), frozenset({("u", "x", 0), ("u", "x", 1)})
        )

    def test_contract_single_arc(self):
        G = Multidigraph.from_pairs([("z", "u")])
        assert contract_arc(G, "z", "u") == Multidigraph(frozenset({"u"}))

    def test_contract_two_cycle(self):
        G = Multidigraph.from_pairs([("z", "u"), ("u", "z")])
        assert contract_arc(G, "z", "u") == Multidigraph(frozenset({"u"}))

    def test_contract_requires_arc(self):
        with pytest.raises(InputError):
            contract_arc(Multidigraph.from_pairs([("u", "z")]), "z", "u")

    @pytest.mark.parametrize("seed", range(40))
    def test_contract_invariants(self, seed):
        M = random_multidiforest(random.Random(seed)).without_loops()
        for z, u, _ in M.sorted_arcs():
            C = contract_arc(M, z, u)
            assert len(C.vertices) == len(M.vertices) - 1
            assert all(s != t for s, t, _ in C.arcs)
            assert len(C.arcs) == len(set(C.arcs))


class TestIntervals:
    X = IntervalSet(
        (("I02", 0, 2), ("I06", 0, 6), ("I13", 1, 3), ("I47", 4, 7), ("I58", 5, 8))
    )

    def test_example_graph(self):
        expected = Graph.from_edges(
            [("I02", "I06"), ("I02", "I13"), ("I06", "I13"), ("I06", "I47"), ("I06", "I58"), ("I47", "I58")]
        )
        assert interval_overlap_graph(self.X) == expected

    def test_disjoint(self):
        G = interval_overlap_graph(IntervalSet((("p", 0, 1), ("q", 2, 3))))
        assert not G.edges and G.vertices == {"p", "q"}

    def test_touching_endpoints_overlap(self):
        G = interval_overlap_graph(IntervalSet((("p", 0, 1), ("q", 1, 2))))
        assert G.edges == {frozenset({"p", "q"})}

    def test_exact_rationals(self):
        third = Fraction(1, 3)
        G = interval_overlap_graph(IntervalSet((("p", 0, third), ("q", third, 1))))
        assert len(G.edges) == 1

    def test_validation(self):
        with pytest.raises(InputError):
            Interval("p", 2, 1)
        with pytest.raises(InputError):
            IntervalSet((("p", 0, 1), ("p", 2, 3)))

    @given(st.permutations(range(5)))
    def test_order_independent(self, perm):
        shuffled = IntervalSet(tuple(self.X.intervals[k] for k in perm))
        assert interval_overlap_graph(shuffled) == interval_overlap_graph(self.X)
