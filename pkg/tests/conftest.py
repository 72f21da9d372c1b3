"""Shared fixtures: the worked examples and a deterministic random corpus."""

from __future__ import annotations

import random

import pytest

from pinnacle import Graph, Labeling


def make_er_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]
    return Graph(10, outer + spokes + inner)


@pytest.fixture
def petersen() -> Graph:
    return petersen_graph()


@pytest.fixture
def petersen_seed_set() -> frozenset[int]:
    """Independent triple whose layered labeling pins the top three labels."""
    return frozenset({0, 3, 7})


@pytest.fixture
def petersen_4_7_10() -> Labeling:
    """A labeling of the Petersen graph with pinnacle set {4, 7, 10}."""
    return Labeling([7, 5, 3, 10, 6, 1, 8, 4, 9, 2])


@pytest.fixture
def five_graph() -> Graph:
    """5 vertices a..e with edges a-b, b-c, c-e, e-d, d-b, b-e."""
    return Graph(5, [(0, 1), (1, 2), (2, 4), (4, 3), (3, 1), (1, 4)])


@pytest.fixture
def two_bottoms_graph() -> Graph:
    """Six vertices; its size-3 pinnacle poset has two minimal elements."""
    return Graph(6, [(0, 1), (1, 2), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5)])


@pytest.fixture
def triangle_path_triangle() -> Graph:
    """Two triangles joined by a path; 8 vertices, 9 edges."""
    return Graph(
        8, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 7)]
    )


@pytest.fixture
def two_region_graph() -> Graph:
    """8 vertices partitionable into rooted trees of sizes 5 and 3."""
    return Graph(
        8, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (5, 7), (6, 7)]
    )


@pytest.fixture(scope="session")
def random_corpus() -> list[Graph]:
    """200 Erdos-Renyi graphs, n <= 7, edge probability cycling 0.2/0.5/0.8."""
    rng = random.Random(91702)
    probs = (0.2, 0.5, 0.8)
    return [
        make_er_graph(rng, rng.randint(1, 7), probs[i % 3]) for i in range(200)
    ]
