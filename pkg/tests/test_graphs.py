import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sgcolor.book import build_book, canonical_signature
from sgcolor.complete import build_complete
from sgcolor.graphs import (
    GraphError,
    SignedGraph,
    automorphisms,
    build_graph,
    cycle_sign,
    is_balanced,
    negative_cycle,
    switch,
    switching_equivalent,
    switching_isomorphic,
)

from oracles import (
    balanced_by_cycle_enumeration,
    brute_force_automorphisms,
    random_signed_graph,
)


def triangle(signs=(1, 1, 1)):
    return build_graph(3, [(1, 2, signs[0]), (2, 3, signs[1]), (1, 3, signs[2])])


def signed_cycle(length, negatives=0):
    return build_graph(
        length,
        [
            (i, i % length + 1, -1 if i <= negatives else 1)
            for i in range(1, length + 1)
        ],
    )


@st.composite
def signed_graphs(draw, max_vertices=8):
    n = draw(st.integers(2, max_vertices))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    edges = []
    for u, v in pairs:
        if draw(st.booleans()):
            edges.append((u, v, draw(st.sampled_from((1, -1)))))
    return SignedGraph(n, tuple(edges))


class TestBuildGraph:
    def test_all_positive_triangle(self):
        g = triangle()
        assert g.vertex_count == 3
        assert g.max_degree() == 2
        assert g.is_all_positive

    def test_single_vertex_no_edges(self):
        g = build_graph(1, [])
        assert g.max_degree() == 0

    def test_self_loop_rejected(self):
        with pytest.raises(GraphError, match="self-loop"):
            build_graph(2, [(1, 1, 1)])

    def test_duplicate_edge_rejected(self):
        with pytest.raises(GraphError, match="duplicate"):
            build_graph(3, [(1, 2, 1), (2, 1, -1)])

    def test_out_of_range_endpoint_rejected(self):
        with pytest.raises(GraphError, match="outside"):
            build_graph(2, [(1, 3, 1)])

    def test_bad_sign_rejected(self):
        with pytest.raises(GraphError, match="sign"):
            build_graph(2, [(1, 2, 0)])


class TestMaxDegree:
    @pytest.mark.parametrize("m,r,k", [(4, 1, 2), (5, 2, 3), (6, 2, 4)])
    def test_book_with_even_pages(self, m, r, k):
        assert build_book(m, 2 * r, k).underlying.max_degree() == 2 * r + 1

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_complete(self, n):
        assert build_complete(n).max_degree() == n - 1


class TestSwitch:
    def test_empty_set_is_identity(self):
        g = triangle()
        assert switch(g, []) == g

    def test_single_vertex_flips_its_edges(self):
        g = switch(triangle(), [1])
        assert g.sign(1, 2) == -1
        assert g.sign(1, 3) == -1
        assert g.sign(2, 3) == 1

    def test_full_vertex_set_is_identity(self):
        g = triangle((1, -1, 1))
        assert switch(g, range(1, 4)) == g

    def test_invalid_vertex(self):
        with pytest.raises(GraphError):
            switch(triangle(), [4])

    @settings(max_examples=60, deadline=None)
    @given(signed_graphs(), st.data())
    def test_involution(self, g, data):
        x = data.draw(st.sets(st.integers(1, g.vertex_count)))
        assert switch(switch(g, x), x) == g


class TestBalance:
    def test_positive_triangle(self):
        assert is_balanced(triangle())

    def test_one_negative_triangle(self):
        g = triangle((-1, 1, 1))
        assert not is_balanced(g)
        witness = negative_cycle(g)
        assert sorted(witness.vertices) == [1, 2, 3]
        assert witness.sign == -1

    def test_book_with_one_negative_spoke(self):
        g = canonical_signature(build_book(5, 3, 3), 1)
        assert not is_balanced(g)

    def test_witness_sign_is_negative(self):
        rng = random.Random(5)
        for _ in range(50):
            g = random_signed_graph(rng, rng.randint(3, 8))
            w = negative_cycle(g)
            if w is not None:
                assert cycle_sign(g, w.vertices) == -1
                assert len(set(w.vertices)) == len(w.vertices) >= 3

    @settings(max_examples=80, deadline=None)
    @given(signed_graphs())
    def test_agrees_with_cycle_enumeration(self, g):
        assert is_balanced(g) == balanced_by_cycle_enumeration(g)

    def test_balanced_iff_equivalent_to_all_positive(self):
        rng = random.Random(11)
        for _ in range(40):
            g = random_signed_graph(rng, rng.randint(2, 7))
            all_pos = g.with_signs([1] * len(g.edges))
            assert is_balanced(g) == (switching_equivalent(g, all_pos) is not None)


class TestSwitchingEquivalent:
    def test_reflexive(self):
        g = triangle((-1, 1, -1))
        x = switching_equivalent(g, g)
        assert x is not None
        assert switch(g, x) == g

    def test_balanced_vs_unbalanced_cycle(self):
        assert switching_equivalent(triangle(), triangle((-1, 1, 1))) is None

    def test_all_negative_book_equivalent_to_full_spoke_form_for_odd_m(self):
        book = build_book(5, 3, 3)
        all_neg = book.underlying.with_signs([-1] * book.edge_count)
        target = canonical_signature(book, book.n)
        x = switching_equivalent(all_neg, target)
        assert x is not None
        assert switch(all_neg, x) == target

    def test_witness_reproduces_target_exactly(self):
        rng = random.Random(23)
        for _ in range(60):
            g = random_signed_graph(rng, rng.randint(2, 8))
            x0 = {v for v in range(1, g.vertex_count + 1) if rng.random() < 0.5}
            h = switch(g, x0)
            x = switching_equivalent(g, h)
            assert x is not None
            assert switch(g, x) == h

    def test_different_topology_is_an_error(self):
        g1 = build_graph(3, [(1, 2, 1), (2, 3, 1)])
        g2 = build_graph(3, [(1, 2, 1), (1, 3, 1)])
        with pytest.raises(GraphError):
            switching_equivalent(g1, g2)


class TestAutomorphisms:
    def test_complete_graph(self):
        assert len(automorphisms(build_complete(4))) == 24

    def test_five_cycle(self):
        assert len(automorphisms(signed_cycle(5))) == 10

    def test_book_matches_brute_force(self):
        g = build_book(5, 3, 3).underlying
        found = automorphisms(g)
        assert sorted(found) == sorted(brute_force_automorphisms(g))
        assert len(found) == 12

    def test_small_random_graphs_match_brute_force(self):
        rng = random.Random(3)
        for _ in range(20):
            g = random_signed_graph(rng, rng.randint(2, 6))
            assert sorted(automorphisms(g)) == sorted(brute_force_automorphisms(g))

    def test_limit_is_enforced(self):
        g = build_graph(17, [(i, i + 1, 1) for i in range(1, 17)])
        with pytest.raises(GraphError, match="at most 16"):
            automorphisms(g)


class TestSwitchingIsomorphic:
    def test_graph_vs_its_switch(self):
        rng = random.Random(9)
        for _ in range(20):
            g = random_signed_graph(rng, rng.randint(2, 6))
            x = {v for v in range(1, g.vertex_count + 1) if rng.random() < 0.5}
            assert switching_isomorphic(g, switch(g, x))

    def test_one_negative_k5_vs_all_positive(self):
        assert not switching_isomorphic(build_complete(5, 1), build_complete(5))

    def test_canonical_book_signatures_with_distinct_spoke_counts(self):
        book = build_book(5, 3, 3)
        for a in range(book.n + 1):
            for b in range(a + 1, book.n + 1):
                assert not switching_isomorphic(
                    canonical_signature(book, a), canonical_signature(book, b)
                )

    def test_different_topology_is_false(self):
        g1 = build_graph(3, [(1, 2, 1), (2, 3, 1)])
        g2 = build_graph(3, [(1, 2, 1), (1, 3, 1)])
        assert not switching_isomorphic(g1, g2)
