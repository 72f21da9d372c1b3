import random
from itertools import combinations

import pytest

from pinnacle import (
    DecisionInstance,
    Graph,
    PinnacleSet,
    add_universal_vertex,
    enumerate_pinnacle_sets,
    is_connected,
    is_independent,
    reduce_to_pinnacle_existence,
    reduce_to_pinnacle_size,
    verify_existence_certificate,
    verify_size_certificate,
)
from conftest import make_er_graph


def max_independent_size(g: Graph) -> int:
    for k in range(g.n, 0, -1):
        if any(
            is_independent(g, c) for c in combinations(range(g.n), k)
        ):
            return k
    return 0


class TestDecisionInstance:
    def test_kind_validated(self):
        with pytest.raises(ValueError, match="kind"):
            DecisionInstance(kind="clique", graph=Graph(2), k=1)

    def test_payload_shape_validated(self):
        with pytest.raises(ValueError):
            DecisionInstance(kind="independent_set", graph=Graph(2))
        with pytest.raises(ValueError):
            DecisionInstance(
                kind="pinnacle_size", graph=Graph(2), k=1, target_set=PinnacleSet([2])
            )
        with pytest.raises(ValueError):
            DecisionInstance(kind="pinnacle_existence", graph=Graph(2), k=1)

    def test_k_range(self):
        with pytest.raises(ValueError):
            DecisionInstance(kind="independent_set", graph=Graph(3), k=4)


class TestUniversalVertex:
    def test_two_isolated_vertices_become_a_star(self):
        h = add_universal_vertex(Graph(2))
        assert h == Graph.complete_bipartite(1, 2) or h.m == 2 and h.degree(2) == 2

    def test_triangle_becomes_k4(self):
        assert add_universal_vertex(Graph.complete(3)) == Graph.complete(4)

    def test_two_disjoint_edges(self):
        h = add_universal_vertex(Graph(4, [(0, 1), (2, 3)]))
        assert h.n == 5 and h.degree(4) == 4 and is_connected(h)


class TestSizeReduction:
    def test_connected_instance_passes_through(self):
        inst = DecisionInstance(kind="independent_set", graph=Graph.complete(3), k=2)
        out = reduce_to_pinnacle_size(inst)
        assert out.kind == "pinnacle_size"
        assert out.graph == inst.graph and out.k == 2

    def test_k1_left_untouched_even_when_disconnected(self):
        g = Graph(4, [(0, 1), (2, 3)])
        out = reduce_to_pinnacle_size(
            DecisionInstance(kind="independent_set", graph=g, k=1)
        )
        assert out.graph == g

    def test_disconnected_gains_gadget(self):
        g = Graph(4, [(0, 1), (2, 3)])
        out = reduce_to_pinnacle_size(
            DecisionInstance(kind="independent_set", graph=g, k=2)
        )
        assert out.graph.n == 5 and is_connected(out.graph)

    def test_wrong_kind_rejected(self):
        inst = DecisionInstance(kind="pinnacle_size", graph=Graph(2), k=1)
        with pytest.raises(ValueError, match="independent_set"):
            reduce_to_pinnacle_size(inst)

    def test_empty_graph_rejected(self):
        with pytest.raises(ValueError, match="empty"):
            reduce_to_pinnacle_size(
                DecisionInstance(kind="independent_set", graph=Graph(0), k=1)
            )

    @pytest.mark.parametrize(
        "g, k, answer",
        [
            (Graph.complete(3), 2, False),
            (Graph.cycle(5), 2, True),
            (Graph(4, [(0, 1), (2, 3)]), 2, True),
        ],
    )
    def test_answers_preserved(self, g, k, answer):
        assert (max_independent_size(g) >= k) == answer
        out = reduce_to_pinnacle_size(
            DecisionInstance(kind="independent_set", graph=g, k=k)
        )
        cat = enumerate_pinnacle_sets(out.graph)
        assert (max(cat.sizes()) >= k) == answer


class TestExistenceReduction:
    @pytest.mark.parametrize(
        "g, k, target, answer",
        [
            (Graph.cycle(5), 2, (4, 5), True),
            (Graph.complete(4), 2, (3, 4), False),
            (Graph.path(4), 2, (3, 4), True),
        ],
    )
    def test_connected_examples(self, g, k, target, answer):
        out = reduce_to_pinnacle_existence(
            DecisionInstance(kind="independent_set", graph=g, k=k)
        )
        assert out.target_set == target
        assert (out.target_set in enumerate_pinnacle_sets(out.graph)) == answer

    def test_disconnected_gadgeted_including_k1(self):
        g = Graph(4, [(0, 1), (2, 3)])
        out = reduce_to_pinnacle_existence(
            DecisionInstance(kind="independent_set", graph=g, k=1)
        )
        assert out.graph.n == 5
        assert out.target_set == (5,)
        assert out.target_set in enumerate_pinnacle_sets(out.graph)


class TestVerifiers:
    def test_size_certificate_accepts_seed_triple(self, petersen, petersen_seed_set):
        assert verify_size_certificate(petersen, 3, petersen_seed_set)

    def test_size_certificate_rejects_adjacent_pair(self):
        assert not verify_size_certificate(Graph.complete(4), 2, {0, 1})

    def test_size_certificate_needs_reachability(self):
        g = Graph(4, [(0, 1), (2, 3)])
        assert not verify_size_certificate(g, 1, {0})
        assert verify_size_certificate(g, 1, {0, 2})  # oversized witness accepted

    def test_size_certificate_range_check(self):
        with pytest.raises(ValueError, match="out of range"):
            verify_size_certificate(Graph(2), 1, {9})

    def test_existence_certificate(self, five_graph, petersen, petersen_4_7_10):
        assert verify_existence_certificate(five_graph, (4, 5), [5, 2, 3, 1, 4])
        assert not verify_existence_certificate(five_graph, (5,), [5, 2, 3, 1, 4])
        assert verify_existence_certificate(petersen, (4, 7, 10), petersen_4_7_10)

    def test_existence_certificate_bad_labeling(self, five_graph):
        with pytest.raises(ValueError):
            verify_existence_certificate(five_graph, (5,), [1, 1, 2, 3, 4])


class TestGadgetLaw:
    def test_large_independent_sets_avoid_the_new_vertex(self):
        rng = random.Random(43)
        for _ in range(40):
            g = make_er_graph(rng, rng.randint(2, 6), rng.choice([0.2, 0.5]))
            h = add_universal_vertex(g)
            z = g.n
            for k in range(2, g.n + 1):
                g_sets = {
                    c for c in combinations(range(g.n), k) if is_independent(g, c)
                }
                h_sets = {
                    c for c in combinations(range(h.n), k) if is_independent(h, c)
                }
                assert all(z not in c for c in h_sets)
                assert g_sets == h_sets


class TestSoundnessSample:
    def test_three_answers_agree(self):
        rng = random.Random(47)
        for _ in range(25):
            g = make_er_graph(rng, rng.randint(1, 6), rng.choice([0.2, 0.5, 0.8]))
            alpha = max_independent_size(g)
            for k in range(1, g.n + 1):
                want = alpha >= k
                inst = DecisionInstance(kind="independent_set", graph=g, k=k)
                size_inst = reduce_to_pinnacle_size(inst)
                size_cat = enumerate_pinnacle_sets(size_inst.graph)
                assert (max(size_cat.sizes()) >= k) == want
                exist_inst = reduce_to_pinnacle_existence(inst)
                exist_cat = enumerate_pinnacle_sets(exist_inst.graph)
                assert (exist_inst.target_set in exist_cat) == want
