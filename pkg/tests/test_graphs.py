import math
import random
from itertools import combinations

import networkx as nx
import pytest

from diamup import (
    DIAM_2_OR_3,
    DIAM_3,
    DIAM_GE_4,
    DISCONNECTS,
    INF,
    Graph,
    GraphFormatError,
    bfs_distances,
    canonical_edges,
    classify_deletion,
    complete_graph,
    components,
    cycle_graph,
    cycle_weights,
    delete_edges,
    diameter,
    diametral_pair,
    distance_table,
    find_path_of_length_at_least,
    format_edge_list,
    girth,
    is_connected,
    parse_edge_list,
    path_graph,
    spanning_tree_from_path,
    star_graph,
)
from conftest import random_connected_graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


class TestGraphConstruction:
    def test_canonical_edge_order(self):
        g = Graph(4, [(3, 1), (2, 0), (1, 0)])
        assert g.edges == ((0, 1), (0, 2), (1, 3))
        assert g.adjacency[1] == (0, 3)
        assert g.has_edge(1, 3) and g.has_edge(3, 1)

    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            Graph(3, [(1, 1)])

    def test_rejects_parallel_edges(self):
        with pytest.raises(ValueError):
            Graph(3, [(0, 1), (1, 0)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            Graph(3, [(0, 3)])

    def test_rejects_empty_vertex_set(self):
        with pytest.raises(ValueError):
            Graph(0)

    def test_canonical_edges_dedupes(self):
        assert canonical_edges([(2, 1), (1, 2), (0, 1)]) == ((0, 1), (1, 2))


class TestDistances:
    def test_bfs_cycle(self):
        assert bfs_distances(cycle_graph(5), 0) == [0, 1, 2, 2, 1]

    def test_bfs_path(self):
        assert bfs_distances(path_graph(4), 0) == [0, 1, 2, 3]

    def test_bfs_unreachable(self):
        assert bfs_distances(Graph(2), 0) == [0, INF]

    def test_bfs_source_out_of_range(self):
        with pytest.raises(ValueError):
            bfs_distances(path_graph(3), 5)

    def test_diameter_examples(self, petersen):
        assert diameter(cycle_graph(5)) == 2
        assert diameter(petersen) == 2
        assert diameter(cycle_graph(4)) == 2  # K4 minus a perfect matching
        assert diameter(Graph(1)) == 0
        assert diameter(Graph(3, [(0, 1)])) == INF

    def test_diametral_pair_is_canonical(self):
        assert diametral_pair(cycle_graph(5)) == (0, 2)
        assert diametral_pair(path_graph(4)) == (0, 3)
        assert diametral_pair(Graph(3, [(1, 2)])) == (0, 1)
        assert diametral_pair(Graph(1)) is None

    def test_distance_table_properties(self, small_catalog):
        for g in small_catalog[:60]:
            table = distance_table(g)
            for u in range(g.n):
                assert table[u][u] == 0
                for v in range(g.n):
                    assert table[u][v] == table[v][u]
                    for w in range(g.n):
                        assert table[u][w] <= table[u][v] + table[v][w]

    def test_against_networkx(self):
        rng = random.Random(7)
        for _ in range(40):
            g = random_connected_graph(rng, rng.randint(4, 10), 0.4)
            assert diameter(g) == nx.diameter(to_nx(g))


class TestGirthAndCycleWeights:
    def test_girth_examples(self, petersen):
        assert girth(complete_graph(4)) == 3
        assert girth(petersen) == 5
        assert girth(star_graph(3)) == INF

    def test_cycle_weight_examples(self):
        assert set(cycle_weights(cycle_graph(5)).values()) == {5}
        assert set(cycle_weights(complete_graph(4)).values()) == {3}
        assert set(cycle_weights(star_graph(3)).values()) == {INF}

    def test_cycle_weights_match_deletion_distance(self, small_catalog):
        for g in small_catalog[:80]:
            for (u, v), w in cycle_weights(g).items():
                assert w == 1 + bfs_distances(delete_edges(g, [(u, v)]), u)[v]

    def test_cycle_weights_match_shortest_cycle_enumeration(self, small_catalog):
        # independent check: enumerate all vertex subsets and cycle orderings
        def shortest_cycle_through(g, e):
            best = INF
            for size in range(3, g.n + 1):
                for verts in combinations(range(g.n), size):
                    if e[0] not in verts or e[1] not in verts:
                        continue
                    import itertools

                    for perm in itertools.permutations(verts[1:]):
                        cyc = (verts[0],) + perm
                        pairs = {
                            tuple(sorted((cyc[i], cyc[(i + 1) % size])))
                            for i in range(size)
                        }
                        if e in pairs and all(g.has_edge(a, b) for a, b in pairs):
                            best = min(best, size)
                if best < INF:
                    return best
            return best

        for g in small_catalog:
            if g.n > 5:
                continue
            ws = cycle_weights(g)
            for e in g.edges:
                assert ws[e] == shortest_cycle_through(g, e)

    def test_girth_against_networkx(self):
        rng = random.Random(13)
        for _ in range(30):
            g = random_connected_graph(rng, rng.randint(4, 9), 0.35)
            expected = nx.girth(to_nx(g))
            got = girth(g)
            assert got == expected or (got == INF and expected == math.inf)


class TestClassifyDeletion:
    def test_weight5_edge(self):
        g = cycle_graph(5)
        assert classify_deletion(g, (0, 1)) == DIAM_GE_4
        assert diameter(delete_edges(g, [(0, 1)])) == 4

    def test_weight3_edge(self):
        g = complete_graph(4)
        assert classify_deletion(g, (0, 1)) == DIAM_2_OR_3
        assert diameter(delete_edges(g, [(0, 1)])) == 2

    def test_weight4_edge(self):
        g = cycle_graph(4)
        assert classify_deletion(g, (0, 1)) == DIAM_3
        assert diameter(delete_edges(g, [(0, 1)])) == 3

    def test_cut_edge(self):
        g = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2)])  # diameter two, (0,3) is a bridge
        assert classify_deletion(g, (0, 3)) == DISCONNECTS

    def test_requires_diameter_two(self):
        with pytest.raises(ValueError):
            classify_deletion(path_graph(4), (0, 1))

    def test_requires_an_edge(self):
        with pytest.raises(ValueError):
            classify_deletion(cycle_graph(4), (0, 2))


class TestComponentsAndDeletion:
    def test_components_examples(self):
        assert components(cycle_graph(4)) == [[0, 1, 2, 3]]
        assert components(Graph(4, [(0, 1), (2, 3)])) == [[0, 1], [2, 3]]
        assert components(Graph(3)) == [[0], [1], [2]]

    def test_delete_edges_examples(self):
        g = delete_edges(complete_graph(4), [(0, 1)])
        assert g.num_edges == 5 and diameter(g) == 2
        p = delete_edges(cycle_graph(5), [(0, 4)])
        assert diameter(p) == 4 and p.num_edges == 4  # a five-vertex path
        g2 = cycle_graph(6)
        assert delete_edges(g2, []) == g2

    def test_delete_edges_rejects_non_edge(self):
        with pytest.raises(ValueError):
            delete_edges(cycle_graph(4), [(0, 2)])

    def test_deletion_monotonicity(self, small_catalog):
        # distances never shrink when edges go away
        rng = random.Random(99)
        for _ in range(60):
            g = random_connected_graph(rng, rng.randint(4, 9), 0.45)
            f = [e for e in g.edges if rng.random() < 0.3]
            h = delete_edges(g, f)
            if not is_connected(h):
                continue
            for u in range(g.n):
                before = bfs_distances(g, u)
                after = bfs_distances(h, u)
                assert all(after[v] >= before[v] for v in range(g.n))
            assert diameter(h) >= diameter(g)


class TestPathsAndSpanningTrees:
    def test_find_path_examples(self):
        assert find_path_of_length_at_least(cycle_graph(5), 4) == [0, 1, 2, 3, 4]
        assert find_path_of_length_at_least(star_graph(3), 3) is None
        assert find_path_of_length_at_least(path_graph(4), 3) == [0, 1, 2, 3]

    def test_find_path_is_exact_on_catalog(self, small_catalog):
        # no false negatives: compare with exhaustive longest-path search
        def longest_path_len(g):
            best = 0
            order = list(range(g.n))

            def ext(u, onpath, depth):
                nonlocal best
                best = max(best, depth)
                for w in g.adjacency[u]:
                    if not onpath & (1 << w):
                        ext(w, onpath | (1 << w), depth + 1)

            for s in order:
                ext(s, 1 << s, 0)
            return best

        for g in small_catalog[:80]:
            longest = longest_path_len(g)
            for d in range(1, g.n):
                found = find_path_of_length_at_least(g, d)
                assert (found is not None) == (d <= longest)
                if found is not None:
                    assert len(found) == d + 1
                    assert len(set(found)) == len(found)
                    assert all(g.has_edge(a, b) for a, b in zip(found, found[1:]))

    def test_spanning_tree_keeps_path_as_branch(self):
        tree = spanning_tree_from_path(cycle_graph(5), [0, 1, 2, 3, 4])
        assert tree.num_edges == 4 and diameter(tree) == 4

        tree = spanning_tree_from_path(complete_graph(4), [0, 1, 2, 3])
        assert tree.num_edges == 3 and diameter(tree) == 3

    def test_spanning_tree_identity_on_trees(self):
        star = star_graph(3)
        assert spanning_tree_from_path(star, [1, 0]) == star

    def test_spanning_tree_rejects_disconnected(self):
        with pytest.raises(ValueError):
            spanning_tree_from_path(Graph(3, [(0, 1)]), [0, 1])

    def test_spanning_tree_rejects_non_path(self):
        with pytest.raises(ValueError):
            spanning_tree_from_path(cycle_graph(4), [0, 2])

    def test_path_tree_subgraph_equivalence(self, small_catalog):
        # longest path length == max spanning-tree diameter
        # == max connected-spanning-subgraph diameter (checked exhaustively)
        for g in small_catalog:
            if g.n > 5:
                continue
            m = g.num_edges
            best_tree = 0
            best_sub = 0
            for keep_size in range(g.n - 1, m + 1):
                for kept in combinations(g.edges, keep_size):
                    h = Graph(g.n, kept)
                    if not is_connected(h):
                        continue
                    dh = diameter(h)
                    best_sub = max(best_sub, dh)
                    if keep_size == g.n - 1:
                        best_tree = max(best_tree, dh)
            longest = 1
            while find_path_of_length_at_least(g, longest + 1) is not None:
                longest += 1
            if g.n == 1:
                continue
            assert best_tree == best_sub == longest


class TestEdgeListFormat:
    def test_roundtrip(self, small_catalog):
        for g in small_catalog[:30]:
            assert parse_edge_list(format_edge_list(g)) == g

    def test_comments_and_blanks_ignored(self):
        text = "# a comment\n\n3 2\n0 1\n# another\n1 2\n"
        assert parse_edge_list(text) == path_graph(3)

    @pytest.mark.parametrize(
        "text",
        [
            "",
            "3\n",
            "3 1\n",
            "3 1\n0 0\n",
            "3 1\n0 3\n",
            "3 2\n0 1\n0 1\n",
            "3 2\n0 1\n1 2\n2 0\n",
            "3 1\nx y\n",
        ],
    )
    def test_parse_errors(self, text):
        with pytest.raises(GraphFormatError):
            parse_edge_list(text)
