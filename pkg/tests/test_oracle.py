import itertools

import pytest

from flipdist.errors import InstanceTooLarge
from flipdist.generate import GenSpec, generate_instance
from flipdist.oracle import (
    build_flip_graph,
    enumerate_triangulations_direct,
    exact_flip_distance,
)
from flipdist.triangulation import Instance, Triangulation, greedy_triangulate

# Triangulation counts of a convex n-gon are the Catalan numbers C(n-2).
CATALAN = {4: 2, 5: 5, 6: 14, 7: 42, 8: 132}


@pytest.mark.parametrize("n", sorted(CATALAN))
def test_convex_gon_counts(n):
    inst = generate_instance(GenSpec(seed=n, n_points=n))
    nodes = enumerate_triangulations_direct(inst)
    assert len(nodes) == CATALAN[n]
    graph = build_flip_graph(greedy_triangulate(inst))
    assert sorted(graph.nodes) == nodes


def test_square_graph(square):
    graph = build_flip_graph(greedy_triangulate(square))
    assert len(graph.nodes) == 2
    assert all(len(adj) == 1 for adj in graph.adjacency)


def test_dart_graph_single_node(dart):
    # The dart has exactly one triangulation and its only interior edge is
    # not flippable, so the flip graph is a single isolated node.
    graph = build_flip_graph(greedy_triangulate(dart))
    assert len(graph.nodes) == 1
    assert graph.adjacency == [[]]
    assert len(enumerate_triangulations_direct(dart)) == 1


def test_exact_distance_square(square_pair):
    t1, t2 = square_pair
    assert exact_flip_distance(t1, t2) == 1
    assert exact_flip_distance(t1, t1) == 0


def test_exact_distance_symmetric(hexagon):
    t1 = greedy_triangulate(hexagon)
    t2 = greedy_triangulate(hexagon, priority=lambda e: (-e[0], -e[1]))
    assert exact_flip_distance(t1, t2) == exact_flip_distance(t2, t1)


def _distance_matrix(graph):
    return [graph.distances_from(i) for i in range(len(graph.nodes))]


@pytest.mark.parametrize("n", [5, 6])
def test_metric_axioms(n):
    inst = generate_instance(GenSpec(seed=n, n_points=n))
    graph = build_flip_graph(greedy_triangulate(inst))
    dist = _distance_matrix(graph)
    size = len(graph.nodes)
    for i in range(size):
        assert dist[i][i] == 0
        for j in range(size):
            assert dist[i][j] >= (1 if i != j else 0)
            assert dist[i][j] == dist[j][i]
    for i, j, k in itertools.product(range(size), repeat=3):
        assert dist[i][k] <= dist[i][j] + dist[j][k]


def test_direct_enumeration_holed(holed):
    nodes = enumerate_triangulations_direct(holed)
    graph = build_flip_graph(greedy_triangulate(holed))
    assert sorted(graph.nodes) == nodes
    assert len(nodes) >= 2


def test_direct_enumeration_size_cap():
    inst = generate_instance(GenSpec(seed=1, n_points=13))
    with pytest.raises(InstanceTooLarge):
        enumerate_triangulations_direct(inst)


def test_three_points_single_triangulation():
    inst = Instance([(0, 0), (5, 0), (0, 5)], [[0, 1, 2]])
    nodes = enumerate_triangulations_direct(inst)
    assert len(nodes) == 1
    t = Triangulation(inst, nodes[0])
    assert t.edges == inst.border_edges


def test_graph_edges_are_single_flips(pentagon):
    graph = build_flip_graph(greedy_triangulate(pentagon))
    for u in graph.node_ids():
        edges_u = set(graph.nodes[u])
        for _, v in graph.adjacency[u]:
            edges_v = set(graph.nodes[v])
            assert len(edges_u - edges_v) == 1
            assert len(edges_v - edges_u) == 1
