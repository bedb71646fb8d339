from itertools import combinations

import pytest

from diamup import (
    BudgetExceededError,
    Graph,
    OracleBudget,
    complete_graph,
    connected_graphs_up_to,
    cycle_graph,
    delete_edges,
    diameter,
    find_path_of_length_at_least,
    is_connected,
    nonmonotonicity_witness,
    oracle_da,
    oracle_eda,
    oracle_mda,
    oracle_meda,
    oracle_mdi,
    path_graph,
    star_graph,
)


class TestOracleMeda:
    def test_c5_infeasible(self):
        assert oracle_meda(cycle_graph(5), 3) is None

    def test_k4_needs_three(self):
        size, f = oracle_meda(complete_graph(4), 3)
        assert size == 3
        assert f == ((0, 1), (0, 2), (1, 3))  # canonical first hit
        h = delete_edges(complete_graph(4), f)
        assert is_connected(h) and diameter(h) == 3

    def test_p4_already_there(self):
        assert oracle_meda(path_graph(4), 3) == (0, ())

    def test_petersen_infeasible(self, petersen):
        assert oracle_meda(petersen, 3) is None

    def test_rejects_disconnected(self):
        with pytest.raises(ValueError):
            oracle_meda(Graph(3, [(0, 1)]), 3)


class TestOracleMda:
    def test_c5(self):
        assert oracle_mda(cycle_graph(5), 3) == (1, ((0, 1),))

    def test_p4(self):
        assert oracle_mda(path_graph(4), 3) == (0, ())

    def test_star_infeasible(self):
        assert oracle_mda(star_graph(3), 3) is None

    def test_min_at_most_exact_min(self, small_catalog):
        # reaching "at least d" can never cost more than "exactly d"
        for g in small_catalog:
            exact = oracle_meda(g, 3)
            if exact is None:
                continue
            atleast = oracle_mda(g, 3)
            assert atleast is not None and atleast[0] <= exact[0]

    def test_monotone_in_target(self, small_catalog):
        # a yes at a higher target is a yes at every lower one
        for g in small_catalog:
            if g.n < 4:
                continue
            mins = {}
            for d in range(2, g.n):
                hit = oracle_mda(g, d)
                mins[d] = None if hit is None else hit[0]
            for d in range(2, g.n - 1):
                lo, hi = mins[d], mins[d + 1]
                if hi is not None:
                    assert lo is not None and lo <= hi


class TestOracleEdaDa:
    def test_eda_example2(self, example2):
        f = oracle_eda(example2, 3)
        assert f == ((0, 1),)
        assert diameter(delete_edges(example2, f)) == 3

    def test_eda_petersen(self, petersen):
        assert oracle_eda(petersen, 3) is None

    def test_eda_trivial_no(self):
        assert oracle_eda(path_graph(5), 2) is None

    def test_da_examples(self):
        assert oracle_da(complete_graph(4), 3) is True
        assert oracle_da(star_graph(3), 3) is False
        assert oracle_da(cycle_graph(5), 4) is True

    def test_da_agrees_with_path_search(self, small_catalog):
        for g in small_catalog:
            for d in range(1, g.n):
                expected = find_path_of_length_at_least(g, d) is not None
                assert oracle_da(g, d) == expected


class TestOracleMdi:
    def test_p3_infeasible(self):
        assert oracle_mdi(path_graph(3), 0, 2, 3) is None

    def test_k4(self):
        assert oracle_mdi(complete_graph(4), 0, 1, 3) == (3, ((0, 1), (0, 2), (1, 3)))

    def test_c4_adjacent(self):
        assert oracle_mdi(cycle_graph(4), 0, 1, 3) == (1, ((0, 1),))

    def test_same_vertex_rejected(self):
        with pytest.raises(ValueError):
            oracle_mdi(complete_graph(4), 2, 2, 3)


class TestBudgetAndDeterminism:
    def test_budget_refuses_large_pool(self):
        g = complete_graph(10)  # 45 edges > default 40
        with pytest.raises(BudgetExceededError):
            oracle_meda(g, 3)

    def test_budget_cap_on_subset_size(self):
        g = complete_graph(4)
        # minimum is 3; a cap of 2 makes the search come up empty
        assert oracle_meda(g, 3, budget=OracleBudget(max_subset_size=2)) is None
        assert oracle_meda(g, 3, budget=OracleBudget(max_subset_size=3)) == (
            3,
            ((0, 1), (0, 2), (1, 3)),
        )

    def test_budget_validation(self):
        with pytest.raises(ValueError):
            OracleBudget(max_edges=0)
        with pytest.raises(ValueError):
            OracleBudget(max_subset_size=-1)

    def test_chunking_never_changes_the_answer(self, small_catalog):
        g = complete_graph(5)
        reference = oracle_meda(g, 3)
        for chunk in (1, 2, 7, 64, 4096):
            assert oracle_meda(g, 3, chunk=chunk) == reference
        g2 = Graph(6, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5)])
        ref2 = oracle_mda(g2, 4)
        for chunk in (1, 3, 1000):
            assert oracle_mda(g2, 4, chunk=chunk) == ref2

    def test_first_hit_is_lexicographic_minimum(self):
        # recompute the full optimal set at the winning size and compare
        g = complete_graph(4)
        size, f = oracle_meda(g, 3)
        winners = []
        for cand in combinations(g.edges, size):
            h = delete_edges(g, cand)
            if is_connected(h) and diameter(h) == 3:
                winners.append(cand)
        assert f == min(winners)

    def test_pool_restriction(self):
        g = cycle_graph(5)
        # only allow deleting two specific edges: (0,1) is no longer first
        hit = oracle_mda(g, 3, pool=[(2, 3), (1, 2)])
        assert hit == (1, ((1, 2),))

    def test_pool_must_be_edges(self):
        with pytest.raises(ValueError):
            oracle_mda(cycle_graph(5), 3, pool=[(0, 2)])


class TestSmallGraphCatalog:
    def test_counts_by_order(self):
        counts = {}
        for g in connected_graphs_up_to(7):
            counts[g.n] = counts.get(g.n, 0) + 1
        assert counts == {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}

    def test_all_connected(self, small_catalog):
        assert all(is_connected(g) for g in small_catalog)

    def test_bound_enforced(self):
        with pytest.raises(ValueError):
            connected_graphs_up_to(9)


class TestNonmonotonicityWitness:
    def test_tiny_bounds_have_no_witness(self):
        assert nonmonotonicity_witness(1) is None
        assert nonmonotonicity_witness(3) is None

    def test_witness_exists_at_seven(self):
        w = nonmonotonicity_witness(7)
        assert w is not None
        g = w.graph
        assert g.n <= 7
        d0 = diameter(g)
        assert d0 == w.base_diameter
        # one deletion jumps the diameter by at least two
        jumped = delete_edges(g, [w.jump_edge])
        assert is_connected(jumped)
        assert diameter(jumped) == w.jump_diameter >= d0 + 2
        # raising by exactly one really needs at least two deletions
        assert w.step_min_size >= 2
        confirmed = oracle_meda(g, d0 + 1)
        assert confirmed is not None and confirmed[0] == w.step_min_size
        stepped = delete_edges(g, w.step_deleted)
        assert is_connected(stepped) and diameter(stepped) == d0 + 1

    def test_bound_validation(self):
        with pytest.raises(ValueError):
            nonmonotonicity_witness(0)
        with pytest.raises(ValueError):
            nonmonotonicity_witness(9)
