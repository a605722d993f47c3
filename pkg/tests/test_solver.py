import random
from itertools import product

import pytest

from sgcolor.complete import build_complete
from sgcolor.coloring import is_proper
from sgcolor.graphs import build_graph, switch
from sgcolor.solver import (
    BudgetExceeded,
    SolverError,
    chromatic_index,
    enumerate_colorings,
    exists_coloring,
    signed_cycle_index,
    verify_result,
)

from oracles import (
    classical_chromatic_index,
    random_connected_graph,
    random_signed_graph,
)


def signed_cycle(signs):
    n = len(signs)
    return build_graph(n, [(i, i % n + 1, s) for i, s in enumerate(signs, start=1)])


class TestExistsColoring:
    def test_balanced_four_cycle_with_two_colors(self):
        witness = exists_coloring(signed_cycle([1, 1, 1, 1]), 2)
        assert witness is not None and is_proper(witness)

    def test_unbalanced_triangle_needs_three(self):
        g = signed_cycle([-1, 1, 1])
        assert exists_coloring(g, 2) is None
        assert exists_coloring(g, 3) is not None

    def test_edgeless_graph_with_empty_palette(self):
        g = build_graph(2, [])
        witness = exists_coloring(g, 0)
        assert witness is not None and witness.pairs == ()

    def test_witness_is_deterministic(self):
        g = build_complete(5, 0b1101)
        a = exists_coloring(g, 5)
        b = exists_coloring(g, 5)
        assert a == b

    def test_success_is_monotone_in_palette_size(self):
        rng = random.Random(2)
        for _ in range(25):
            g = random_signed_graph(rng, rng.randint(2, 6))
            if not g.edges:
                continue
            q = rng.randint(1, g.max_degree() + 1)
            if exists_coloring(g, q) is not None:
                assert exists_coloring(g, q + 1) is not None

    def test_budget_exceeded_raises(self):
        g = build_complete(7)
        with pytest.raises(BudgetExceeded):
            exists_coloring(g, 6, budget=0.0)


class TestChromaticIndex:
    def test_every_k4_signature(self):
        for mask in range(64):
            assert chromatic_index(build_complete(4, mask)).chromatic_index == 3

    def test_all_positive_k5(self):
        result = chromatic_index(build_complete(5))
        assert result.chromatic_index == 4
        assert result.vizing_class == "class1"

    def test_five_cycle_with_one_negative_edge(self):
        result = chromatic_index(signed_cycle([-1, 1, 1, 1, 1]))
        assert result.chromatic_index == 3
        assert result.vizing_class == "class2"

    def test_witness_always_proper(self):
        rng = random.Random(13)
        done = 0
        while done < 30:
            g = random_signed_graph(rng, rng.randint(2, 7))
            if not g.edges:
                continue
            result = chromatic_index(g)
            assert verify_result(result)
            assert is_proper(result.witness)
            assert result.chromatic_index in (g.max_degree(), g.max_degree() + 1)
            done += 1

    def test_edgeless_graph_rejected(self):
        with pytest.raises(SolverError):
            chromatic_index(build_graph(3, []))

    def test_invariant_under_switching(self):
        rng = random.Random(19)
        done = 0
        while done < 20:
            g = random_signed_graph(rng, rng.randint(3, 7))
            if not g.edges:
                continue
            x = {v for v in range(1, g.vertex_count + 1) if rng.random() < 0.5}
            assert (
                chromatic_index(g).chromatic_index
                == chromatic_index(switch(g, x)).chromatic_index
            )
            done += 1

    def test_invariant_under_relabeling(self):
        rng = random.Random(29)
        done = 0
        while done < 15:
            g = random_signed_graph(rng, rng.randint(3, 6))
            if not g.edges:
                continue
            perm = list(range(1, g.vertex_count + 1))
            rng.shuffle(perm)
            assert (
                chromatic_index(g).chromatic_index
                == chromatic_index(g.relabeled(perm)).chromatic_index
            )
            done += 1

    def test_all_negative_matches_classical_index(self):
        rng = random.Random(37)
        for _ in range(20):
            n = rng.randint(3, 6)
            pairs = random_connected_graph(rng, n)
            g = build_graph(n, [(u, v, -1) for u, v in pairs])
            assert (
                chromatic_index(g).chromatic_index
                == classical_chromatic_index(n, pairs)
            )


class TestSignedCycleIndex:
    def test_even_negative_count_is_balanced(self):
        assert signed_cycle_index(signed_cycle([-1, -1, 1, 1, 1, 1])) == 2

    def test_odd_negative_count_is_unbalanced(self):
        assert signed_cycle_index(signed_cycle([-1, 1, 1, 1])) == 3

    def test_agrees_with_search_on_all_small_cycles(self):
        for length in range(3, 9):
            for signs in product((1, -1), repeat=length):
                g = signed_cycle(list(signs))
                assert (
                    signed_cycle_index(g)
                    == chromatic_index(g).chromatic_index
                )

    def test_non_cycle_rejected(self):
        with pytest.raises(SolverError):
            signed_cycle_index(build_graph(3, [(1, 2, 1), (2, 3, 1)]))
        with pytest.raises(SolverError):
            signed_cycle_index(build_complete(4))
        two_triangles = build_graph(
            6,
            [(1, 2, 1), (2, 3, 1), (1, 3, 1), (4, 5, 1), (5, 6, 1), (4, 6, 1)],
        )
        with pytest.raises(SolverError):
            signed_cycle_index(two_triangles)


class TestEnumerate:
    def test_respects_limit_and_is_duplicate_free(self):
        found = list(enumerate_colorings(build_complete(5), 4, limit=10))
        assert len(found) == 10
        assert len({c.pairs for c in found}) == 10
        assert all(is_proper(c) for c in found)
