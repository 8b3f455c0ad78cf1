#!/usr/bin/env python3
"""
Test Recognition
Interval recognition (chordality, cliques, PQ-tree) and unit interval orders
"""

import os
import sys
from itertools import combinations, permutations

import networkx as nx

# Add the project directory to Python path
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from models import Graph
from services.generators_service import generators_service
from services.interval_service import interval_service
from services.pq_tree import PQTree
from services.recognition_service import connected_components, recognition_service


def _atlas(max_nodes: int):
    for graph in nx.graph_atlas_g():
        if 1 <= graph.number_of_nodes() <= max_nodes:
            yield Graph.from_networkx(graph)


def _interval_oracle(g: Graph) -> bool:
    """Some order of the maximal cliques keeps every vertex's cliques consecutive"""
    graph = g.to_networkx()
    if not nx.is_chordal(graph):
        return False
    cliques = [frozenset(c) for c in nx.find_cliques(graph)]
    for order in permutations(cliques):
        if all(
            _consecutive([i for i, clique in enumerate(order) if v in clique])
            for v in g.vertices
        ):
            return True
    return False


def _consecutive(indices) -> bool:
    return max(indices) - min(indices) + 1 == len(indices)


def _claw_free(g: Graph) -> bool:
    for c in g.vertices:
        for a, b, x in combinations(sorted(g.neighbors(c)), 3):
            if not (g.has_edge(a, b) or g.has_edge(a, x) or g.has_edge(b, x)):
                return False
    return True


# =============================================================================
# PQ-TREE
# =============================================================================

def test_pq_tree_reductions():
    tree = PQTree([1, 2, 3, 4, 5])
    assert tree.reduce([1, 2])
    assert tree.reduce([2, 3])
    frontier = tree.frontier()
    position = {x: i for i, x in enumerate(frontier)}
    assert abs(position[1] - position[2]) == 1 and abs(position[2] - position[3]) == 1
    assert not tree.reduce([1, 3])
    assert tree.reduce([4, 5])
    assert sorted(tree.frontier()) == [1, 2, 3, 4, 5]


# =============================================================================
# CHORDALITY
# =============================================================================

def test_chordality_matches_networkx():
    for g in _atlas(6):
        assert recognition_service.is_chordal(g) == nx.is_chordal(g.to_networkx()), g.edges
        assert (recognition_service.maximal_cliques(g) is not None) == recognition_service.is_chordal(g)


def test_maximal_cliques_match_networkx():
    for g in _atlas(6):
        cliques = recognition_service.maximal_cliques(g)
        if cliques is None:
            continue
        expected = {frozenset(c) for c in nx.find_cliques(g.to_networkx())}
        assert set(cliques) == expected, g.edges
        assert cliques == sorted(cliques, key=sorted)


def test_components_follow_vertex_order():
    adjacency = {"a": ["c"], "b": [], "c": ["a"], "d": ["e"], "e": ["d"]}
    assert connected_components(adjacency, ["e", "b", "c", "a", "d"]) == [["e", "d"], ["b"], ["c", "a"]]


# =============================================================================
# INTERVAL GRAPHS
# =============================================================================

def test_recognize_counterexample():
    g = generators_service.counterexample_graph(0)
    rep = recognition_service.recognize_interval(g)
    assert rep is not None and rep.is_single()
    assert interval_service.d_intersection_graph(rep) == g


def test_recognize_rejects_c4():
    assert recognition_service.recognize_interval(generators_service.cycle(4)) is None


def test_recognize_star():
    g = generators_service.star(3)
    rep = recognition_service.recognize_interval(g)
    assert rep is not None
    assert interval_service.d_intersection_graph(rep) == g


def test_recognize_uses_integer_clique_indices():
    rep = recognition_service.recognize_interval(generators_service.counterexample_graph(0))
    for _, (iv,) in rep.items():
        assert iv.l.denominator == 1 and iv.r.denominator == 1 and iv.l >= 1


def test_recognize_interval_matches_oracle():
    for g in _atlas(6):
        rep = recognition_service.recognize_interval(g)
        assert (rep is not None) == _interval_oracle(g), g.edges
        if rep is not None:
            assert interval_service.d_intersection_graph(rep) == g


def test_recognize_generated_representations():
    for seed in range(25):
        source = generators_service.random_interval_rep(40, 4, seed)
        g = interval_service.d_intersection_graph(source)
        rep = recognition_service.recognize_interval(g)
        assert rep is not None and interval_service.d_intersection_graph(rep) == g, seed


# =============================================================================
# UNIT INTERVAL GRAPHS
# =============================================================================

def test_proper_order_of_path():
    order = recognition_service.recognize_proper_order(generators_service.path(4))
    assert order is not None
    assert list(order.order) in ([1, 2, 3, 4], [4, 3, 2, 1])


def test_proper_order_rejects_claw_and_c4():
    assert recognition_service.recognize_proper_order(generators_service.star(3)) is None
    assert recognition_service.recognize_proper_order(generators_service.cycle(4)) is None


def test_roberts_characterization():
    for g in _atlas(7):
        order = recognition_service.recognize_proper_order(g)
        expected = _claw_free(g) and _interval_oracle(g)
        assert (order is not None) == expected, g.edges
        if order is not None:
            position = order.positions()
            for v in g.vertices:
                assert _consecutive([position[w] for w in g.neighbors(v) | {v}])


if __name__ == "__main__":
    print("🧪 Testing recognition...")
    tests = [(name, obj) for name, obj in list(globals().items()) if name.startswith("test_") and callable(obj)]
    failed = 0
    for name, test in tests:
        try:
            test()
            print(f"✅ {name}")
        except Exception as e:
            failed += 1
            print(f"❌ {name}: {e!r}")
    print(f"\n{len(tests) - failed}/{len(tests)} passed")
    sys.exit(1 if failed else 0)
