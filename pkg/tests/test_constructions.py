from itertools import combinations

import pytest

from pinnacle import (
    Graph,
    Labeling,
    PinnacleSet,
    RealizedInstance,
    basic_labeling,
    bfs_layers,
    complete_bipartite_labeling,
    connected_components,
    cycle_labeling,
    is_connected,
    is_cycle_pinnacle_set,
    is_path_pinnacle_set,
    path_labeling,
    pinnacles,
    realize_any_set,
    realize_max_set,
)


class TestBasicLabeling:
    def test_petersen_pins_top_three(self, petersen, petersen_seed_set):
        lam = basic_labeling(petersen, range(1, 11), petersen_seed_set)
        assert pinnacles(petersen, lam) == (8, 9, 10)

    def test_three_path_single_seed(self):
        lam = basic_labeling(Graph.path(3), [1, 2, 3], {0})
        assert lam == Labeling([3, 2, 1])
        assert pinnacles(Graph.path(3), lam) == (3,)

    def test_square_opposite_seeds(self):
        lam = basic_labeling(Graph.cycle(4), [1, 2, 3, 4], {0, 2})
        assert pinnacles(Graph.cycle(4), lam) == (3, 4)

    def test_oversized_pool_uses_top_labels(self):
        lam = basic_labeling(Graph.path(3), [1, 5, 7, 9], {0})
        assert lam == Labeling([9, 7, 5])

    def test_labels_decrease_along_layers(self, petersen, petersen_seed_set):
        lam = basic_labeling(petersen, range(1, 11), petersen_seed_set)
        layers = bfs_layers(petersen, petersen_seed_set)
        for earlier, later in zip(layers, layers[1:]):
            assert min(lam[v] for v in earlier) > max(lam[v] for v in later)

    def test_dependent_seeds_rejected(self):
        with pytest.raises(ValueError, match="independent"):
            basic_labeling(Graph.path(3), [1, 2, 3], {0, 1})

    def test_unreachable_vertex_rejected(self):
        with pytest.raises(ValueError, match="unreachable"):
            basic_labeling(Graph(3, [(0, 1)]), [1, 2, 3], {0})

    def test_small_or_repeating_pool_rejected(self):
        with pytest.raises(ValueError, match="pool"):
            basic_labeling(Graph.path(3), [1, 2], {0})
        with pytest.raises(ValueError, match="distinct"):
            basic_labeling(Graph.path(3), [1, 2, 2], {0})


class TestRealizeAnySet:
    def test_forest_of_disjoint_paths(self):
        inst = realize_any_set([1, 5, 6, 8], shape="forest")
        assert inst.claimed == (1, 5, 6, 8)
        sizes = sorted(len(c) for c in connected_components(inst.graph))
        assert sizes == [1, 1, 2, 4]

    def test_forest_component_count_matches_size(self):
        for s in [(3,), (2, 5), (1, 2, 3, 9)]:
            inst = realize_any_set(s, shape="forest")
            assert len(connected_components(inst.graph)) == len(s)

    def test_double_star_tree(self):
        inst = realize_any_set([3, 5, 9], shape="tree")
        g = inst.graph
        assert g.n == 9 and g.m == 8 and is_connected(g)
        assert inst.claimed == (3, 5, 9)

    def test_single_label_tree_cases(self):
        assert realize_any_set([1], shape="tree").graph == Graph(1)
        inst = realize_any_set([4], shape="tree")
        assert is_connected(inst.graph) and inst.graph.m == inst.graph.n - 1

    def test_tree_with_one_blocked(self):
        with pytest.raises(ValueError, match="connected"):
            realize_any_set([1, 4], shape="tree")

    def test_empty_set_rejected(self):
        with pytest.raises(ValueError, match="nonempty"):
            realize_any_set([], shape="forest")

    def test_unknown_shape_rejected(self):
        with pytest.raises(ValueError, match="shape"):
            realize_any_set([3], shape="cactus")

    def test_realized_instance_validates(self):
        with pytest.raises(ValueError, match="realizes"):
            RealizedInstance(Graph.path(2), Labeling([1, 2]), PinnacleSet([1, 2]))


class TestRealizeMaxSet:
    def test_petersen_top_triple(self, petersen):
        lam = realize_max_set(petersen, 3)
        assert lam is not None
        assert pinnacles(petersen, lam) == (8, 9, 10)

    def test_complete_graph_has_no_pair(self):
        assert realize_max_set(Graph.complete(4), 2) is None

    def test_isolated_vertices_unreachable(self):
        assert realize_max_set(Graph(3), 2) is None
        assert realize_max_set(Graph(3), 3) is not None

    def test_k_validated(self):
        with pytest.raises(ValueError):
            realize_max_set(Graph.path(3), 0)


class TestCycleLabeling:
    @pytest.mark.parametrize("n, s", [(6, (3, 6)), (8, (3, 5, 8)), (3, (3,))])
    def test_examples(self, n, s):
        lam = cycle_labeling(n, s)
        assert pinnacles(Graph.cycle(n), lam) == s

    def test_rejects_invalid_target(self):
        with pytest.raises(ValueError, match="not a pinnacle set"):
            cycle_labeling(6, [2, 6])
        with pytest.raises(ValueError, match="not a pinnacle set"):
            cycle_labeling(6, [3, 5])

    def test_exhaustive_self_verification(self):
        # Every admissible target up to n=9 really is realized.
        for n in range(3, 10):
            g = Graph.cycle(n)
            for k in range(1, n // 2 + 1):
                for cand in combinations(range(1, n), k - 1):
                    s = PinnacleSet(cand + (n,))
                    if is_cycle_pinnacle_set(n, s):
                        assert pinnacles(g, cycle_labeling(n, s)) == s


class TestPathLabeling:
    @pytest.mark.parametrize("n, s", [(5, (2, 5)), (9, (2, 4, 6, 9)), (2, (2,)), (1, (1,))])
    def test_examples(self, n, s):
        lam = path_labeling(n, s)
        assert pinnacles(Graph.path(n), lam) == s

    def test_two_path_identity(self):
        assert path_labeling(2, [2]) == Labeling([1, 2])

    def test_rejects_invalid_target(self):
        with pytest.raises(ValueError, match="not a pinnacle set"):
            path_labeling(9, [2, 3, 6, 9])

    def test_exhaustive_self_verification(self):
        for n in range(2, 10):
            g = Graph.path(n)
            for k in range(1, (n + 1) // 2 + 1):
                for cand in combinations(range(1, n), k - 1):
                    s = PinnacleSet(cand + (n,))
                    if is_path_pinnacle_set(n, s):
                        assert pinnacles(g, path_labeling(n, s)) == s


class TestCompleteBipartiteLabeling:
    @pytest.mark.parametrize(
        "m, n, k_start, expected",
        [(3, 2, 3, (3, 4, 5)), (3, 2, 5, (5,)), (1, 1, 2, (2,))],
    )
    def test_examples(self, m, n, k_start, expected):
        lam = complete_bipartite_labeling(m, n, k_start)
        assert pinnacles(Graph.complete_bipartite(m, n), lam) == expected

    def test_every_interval_realized(self):
        for m in range(1, 6):
            for n in range(1, m + 1):
                if m + n > 8:
                    continue
                g = Graph.complete_bipartite(m, n)
                for k_start in range(n + 1, m + n + 1):
                    lam = complete_bipartite_labeling(m, n, k_start)
                    assert pinnacles(g, lam) == PinnacleSet.interval(k_start, m + n)

    def test_parameter_validation(self):
        with pytest.raises(ValueError):
            complete_bipartite_labeling(2, 3, 4)
        with pytest.raises(ValueError):
            complete_bipartite_labeling(3, 2, 2)
        with pytest.raises(ValueError):
            complete_bipartite_labeling(3, 2, 6)
