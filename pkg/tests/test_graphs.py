import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pinnacle import (
    Graph,
    Labeling,
    PinnacleSet,
    bfs_layers,
    connected_components,
    delete_edge,
    is_connected,
    is_independent,
    pinnacles,
)
from conftest import make_er_graph


@st.composite
def labeled_graphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    picked = [e for e in pairs if draw(st.booleans())]
    labels = draw(st.permutations(list(range(1, n + 1))))
    return Graph(n, picked), Labeling(labels)


class TestGraphConstruction:
    def test_rejects_self_loop(self):
        with pytest.raises(ValueError, match="self-loop"):
            Graph(2, [(1, 1)])

    def test_rejects_duplicate_even_reversed(self):
        with pytest.raises(ValueError, match="duplicate"):
            Graph(3, [(0, 1), (1, 0)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError, match="out of range"):
            Graph(2, [(0, 2)])

    def test_rejects_negative_n(self):
        with pytest.raises(ValueError):
            Graph(-1)

    def test_neighbors_sorted_and_symmetric(self):
        g = Graph(4, [(2, 0), (3, 0), (0, 1)])
        assert g.neighbors[0] == (1, 2, 3)
        assert g.adj(0, 2) and g.adj(2, 0)
        assert not g.adj(1, 2)

    def test_named_shapes(self):
        assert Graph.cycle(5).m == 5
        assert Graph.path(5).m == 4
        assert Graph.complete(5).m == 10
        assert Graph.complete_bipartite(3, 2).m == 6
        assert Graph.empty(3).m == 0
        with pytest.raises(ValueError):
            Graph.cycle(2)

    def test_equality_and_hash(self):
        a = Graph(3, [(0, 1), (1, 2)])
        b = Graph(3, [(1, 2), (0, 1)])
        assert a == b and hash(a) == hash(b)
        assert a != Graph(3, [(0, 1)])


class TestPinnacleSetType:
    def test_sorts_input(self):
        assert PinnacleSet([5, 2, 9]) == (2, 5, 9)

    def test_rejects_duplicates_and_nonpositive(self):
        with pytest.raises(ValueError):
            PinnacleSet([3, 3])
        with pytest.raises(ValueError):
            PinnacleSet([0, 2])

    def test_interval_and_max_set(self):
        assert PinnacleSet.interval(3, 5) == (3, 4, 5)
        assert PinnacleSet.interval(4, 4) == (4,)
        assert PinnacleSet.max_set(10, 3) == (8, 9, 10)
        with pytest.raises(ValueError):
            PinnacleSet.interval(5, 3)


class TestLabeling:
    def test_rejects_repeats_and_nonpositive(self):
        with pytest.raises(ValueError):
            Labeling([1, 1])
        with pytest.raises(ValueError):
            Labeling([0, 1])

    def test_canonical_flag(self):
        assert Labeling([2, 1, 3]).is_canonical
        assert not Labeling([5, 9]).is_canonical

    def test_vertex_of_and_swapped(self):
        lam = Labeling([3, 1, 2])
        assert lam.vertex_of(1) == 1
        assert lam.swapped(3, 2) == Labeling([2, 1, 3])
        with pytest.raises(ValueError):
            lam.vertex_of(9)


class TestPinnacles:
    def test_worked_five_vertex_examples(self, five_graph):
        assert pinnacles(five_graph, [5, 2, 3, 1, 4]) == (4, 5)
        assert pinnacles(five_graph, [1, 3, 5, 2, 4]) == (5,)

    def test_single_vertex(self):
        assert pinnacles(Graph(1), [1]) == (1,)

    def test_isolated_vertices_count_vacuously(self):
        g = Graph(3, [(0, 1)])
        assert pinnacles(g, [1, 2, 3]) == (2, 3)

    def test_length_mismatch_rejected(self, five_graph):
        with pytest.raises(ValueError, match="entries"):
            pinnacles(five_graph, [1, 2, 3])

    def test_empty_graph_rejected(self):
        with pytest.raises(ValueError):
            pinnacles(Graph(0), [])

    @settings(max_examples=120)
    @given(labeled_graphs())
    def test_top_label_always_a_pinnacle(self, gl):
        g, lam = gl
        assert g.n in pinnacles(g, lam)

    @settings(max_examples=120)
    @given(labeled_graphs())
    def test_pinnacle_vertices_independent(self, gl):
        g, lam = gl
        pins = pinnacles(g, lam)
        carriers = [lam.vertex_of(p) for p in pins]
        assert is_independent(g, carriers)


class TestIsIndependent:
    def test_adjacent_pair_not_independent(self, petersen):
        assert not is_independent(petersen, {0, 1})

    def test_empty_set_independent(self, petersen):
        assert is_independent(petersen, set())

    def test_layered_seed_set_independent(self, petersen, petersen_seed_set):
        assert is_independent(petersen, petersen_seed_set)

    def test_out_of_range_member(self):
        with pytest.raises(ValueError):
            is_independent(Graph(2), {5})


class TestConnectedComponents:
    def test_disjoint_paths_forest(self):
        # Paths of sizes 1, 4, 1, 2 packed consecutively.
        g = Graph(8, [(1, 2), (2, 3), (3, 4), (6, 7)])
        comps = connected_components(g)
        assert sorted(len(c) for c in comps) == [1, 1, 2, 4]
        assert len(comps) == 4
        assert [min(c) for c in comps] == sorted(min(c) for c in comps)

    def test_complete_graph_single_component(self):
        assert len(connected_components(Graph.complete(5))) == 1

    def test_edgeless_graph(self):
        comps = connected_components(Graph(3))
        assert comps == [frozenset({0}), frozenset({1}), frozenset({2})]

    def test_is_connected(self):
        assert is_connected(Graph.path(4))
        assert not is_connected(Graph(4, [(0, 1), (2, 3)]))


class TestBfsLayers:
    def test_petersen_layer_sizes(self, petersen, petersen_seed_set):
        layers = bfs_layers(petersen, petersen_seed_set)
        assert [len(layer) for layer in layers] == [3, 6, 1]

    def test_path_from_one_end(self):
        layers = bfs_layers(Graph.path(3), {0})
        assert layers == [frozenset({0}), frozenset({1}), frozenset({2})]

    def test_triangle_from_one_vertex(self):
        layers = bfs_layers(Graph.complete(3), {1})
        assert [len(layer) for layer in layers] == [1, 2]

    def test_empty_seed_rejected(self):
        with pytest.raises(ValueError, match="nonempty"):
            bfs_layers(Graph.path(3), set())

    def test_unreachable_vertex_rejected(self):
        with pytest.raises(ValueError, match="unreachable"):
            bfs_layers(Graph(3, [(0, 1)]), {0})

    @settings(max_examples=60)
    @given(labeled_graphs(max_n=6), st.data())
    def test_layers_partition_at_exact_distance(self, gl, data):
        g, _ = gl
        if not is_connected(g):
            return
        seed = data.draw(st.integers(0, g.n - 1))
        layers = bfs_layers(g, {seed})
        seen: set[int] = set()
        for i, layer in enumerate(layers):
            assert not (layer & seen)
            seen |= layer
            for v in layer:
                assert _distance(g, seed, v) == i
        assert seen == set(range(g.n))


def _distance(g: Graph, a: int, b: int) -> int:
    frontier, dist, seen = {a}, 0, {a}
    while frontier:
        if b in frontier:
            return dist
        frontier = {u for v in frontier for u in g.neighbors[v]} - seen
        seen |= frontier
        dist += 1
    raise AssertionError("unreachable")


class TestDeleteEdge:
    def test_triangle_minus_edge_is_path(self):
        g = delete_edge(Graph.complete(3), (0, 1))
        assert g == Graph(3, [(0, 2), (1, 2)])

    def test_square_minus_edge_is_path(self):
        g = delete_edge(Graph.cycle(4), (3, 0))
        assert g.m == 3 and is_connected(g)

    def test_five_vertex_graph_count(self, five_graph):
        assert delete_edge(five_graph, (1, 4)).m == 5

    def test_missing_edge_rejected(self):
        with pytest.raises(ValueError, match="not present"):
            delete_edge(Graph.path(3), (0, 2))

    def test_deletion_changes_pinnacle_count_by_at_most_one(self):
        # Check over a deterministic random batch, n <= 9.
        rng = random.Random(5)
        for _ in range(60):
            g = make_er_graph(rng, rng.randint(2, 9), rng.choice([0.2, 0.5, 0.8]))
            if not g.m:
                continue
            labels = list(range(1, g.n + 1))
            rng.shuffle(labels)
            lam = Labeling(labels)
            before = len(pinnacles(g, lam))
            for e in g.sorted_edges():
                after = len(pinnacles(delete_edge(g, e), lam))
                assert before <= after <= before + 1
