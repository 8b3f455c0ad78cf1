#!/usr/bin/env python3
"""
Test Split Checker
Unit 2-interval membership search, certificates and the brute-force oracle
"""

import os
import random
import sys

import networkx as nx

# Add the project directory to Python path
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from models import Graph
from schemas import RepresentativeEdges, SearchLimits, SplitSolution
from services.generators_service import generators_service
from services.interval_service import interval_service
from services.split_search_service import _SplitEngine, split_search_service

COUNTEREXAMPLE = generators_service.counterexample_graph(0)
MODES = ("disjoint", "nondisjoint")


def _search(g: Graph, mode: str):
    return split_search_service.search_split(g, mode, threads=1)


def _connected_atlas(max_nodes: int):
    for graph in nx.graph_atlas_g():
        if 1 <= graph.number_of_nodes() <= max_nodes and nx.is_connected(graph):
            yield Graph.from_networkx(graph)


# =============================================================================
# KNOWN ANSWERS
# =============================================================================

def test_counterexample_is_not_disjoint_unit_2_interval():
    assert _search(COUNTEREXAMPLE, "disjoint").verdict == "no"


def test_counterexample_refutation_fits_a_five_minute_budget():
    limits = SearchLimits(node_budget=10**7, wall_clock_budget=300, memo_limit=200_000)
    result = split_search_service.search_split(COUNTEREXAMPLE, "disjoint", limits, threads=1)
    assert result.verdict == "no", (result.nodes, result.elapsed_seconds)
    assert result.nodes <= limits.node_budget


def test_counterexample_is_nondisjoint_unit_2_interval():
    result = _search(COUNTEREXAMPLE, "nondisjoint")
    assert result.verdict == "yes"
    assert split_search_service.verify_split(COUNTEREXAMPLE, result.solution, "nondisjoint").ok
    # every claw centre must split
    assert {1, 3, 7, 8, 10} <= set(result.solution.split_vertices())


def test_claw_splits_in_disjoint_mode():
    result = _search(generators_service.star(3), "disjoint")
    assert result.verdict == "yes"
    assert result.solution.split[1] is True
    assert not result.solution.internal_edges


def test_k53_is_not_unit_2_interval():
    assert _search(generators_service.complete_bipartite(5, 3), "nondisjoint").verdict == "no"


def test_k15_is_not_unit_2_interval():
    for mode in MODES:
        assert _search(generators_service.star(5), mode).verdict == "no"


def test_single_vertex():
    g = Graph(1)
    for mode in MODES:
        assert split_search_service.brute_force_oracle(g, mode)
        assert _search(g, mode).verdict == "yes"


def test_cycle_matches_oracle():
    c4 = generators_service.cycle(4)
    for mode in MODES:
        expected = split_search_service.brute_force_oracle(c4, mode)
        assert (_search(c4, mode).verdict == "yes") == expected
    assert split_search_service.brute_force_oracle(c4, "disjoint")


def test_variants_stay_non_disjoint():
    for variant in range(1, 6):
        assert _search(generators_service.counterexample_graph(variant), "disjoint").verdict == "no", variant


def test_tiny_node_budget_exhausts():
    result = split_search_service.search_split(
        COUNTEREXAMPLE, "disjoint", SearchLimits(node_budget=1, wall_clock_budget=60), threads=1
    )
    assert result.verdict == "exhausted"
    assert result.solution is None


def test_node_budget_is_shared_by_both_passes():
    for budget in (1, 50, 500):
        limits = SearchLimits(node_budget=budget, wall_clock_budget=60)
        for threads in (1, 2):
            result = split_search_service.search_split(COUNTEREXAMPLE, "disjoint", limits, threads=threads)
            assert result.nodes <= budget, (budget, threads, result.nodes)


def test_deadline_is_shared_by_both_passes():
    limits = SearchLimits(wall_clock_budget=1e-9)
    for threads in (1, 2):
        result = split_search_service.search_split(COUNTEREXAMPLE, "disjoint", limits, threads=threads)
        assert result.verdict == "exhausted", threads


def test_memo_stays_within_its_limit():
    g = generators_service.complete_bipartite(5, 3)
    engine = _SplitEngine(g, "nondisjoint", SearchLimits(memo_limit=8))
    assert engine.run() is None
    assert len(engine.failed) < 8 and len(engine.failed_older) <= 8
    evicting = SearchLimits(memo_limit=1)
    for mode in MODES:
        assert split_search_service.search_split(generators_service.star(5), mode, evicting, threads=1).verdict == "no"


# =============================================================================
# CERTIFICATES
# =============================================================================

def test_unsplit_path_certificate():
    p3 = generators_service.path(3)
    solution = SplitSolution(
        split={1: False, 2: False, 3: False},
        rep_edges=[RepresentativeEdges(u=1, v=2, pairs=[(1, 1)]), RepresentativeEdges(u=2, v=3, pairs=[(1, 1)])],
    )
    assert split_search_service.verify_split(p3, solution, "disjoint").ok


def test_internal_edge_in_disjoint_mode():
    p3 = generators_service.path(3)
    solution = SplitSolution(
        split={1: False, 2: True, 3: False},
        rep_edges=[RepresentativeEdges(u=1, v=2, pairs=[(1, 1)]), RepresentativeEdges(u=2, v=3, pairs=[(1, 2)])],
        internal_edges=[2],
    )
    assert split_search_service.verify_split(p3, solution, "nondisjoint").ok
    assert split_search_service.verify_split(p3, solution, "disjoint").kinds() == ["sibling-adjacent"]


def test_certificate_errors():
    p3 = generators_service.path(3)
    solution = SplitSolution(
        split={1: False, 2: False, 3: False},
        rep_edges=[RepresentativeEdges(u=1, v=3, pairs=[(1, 2)])],
    )
    kinds = set(split_search_service.verify_split(p3, solution, "nondisjoint").kinds())
    assert kinds == {"unknown-edge", "bad-representative", "missing-representative"}


def test_claw_without_split_is_not_unit_interval():
    claw = generators_service.star(3)
    solution = SplitSolution(
        split={v: False for v in claw.vertices},
        rep_edges=[RepresentativeEdges(u=1, v=x, pairs=[(1, 1)]) for x in (2, 3, 4)],
    )
    assert split_search_service.verify_split(claw, solution, "disjoint").kinds() == ["not-unit-interval"]


def test_solution_to_representation():
    for g, mode in ((COUNTEREXAMPLE, "nondisjoint"), (generators_service.star(4), "disjoint")):
        result = _search(g, mode)
        rep = split_search_service.solution_to_representation(g, result.solution, mode)
        report = interval_service.verify_representation(rep, g, require_unit=True, require_disjoint=mode == "disjoint")
        assert report.ok, report.kinds()
        assert rep.d == 2


# =============================================================================
# ORACLE AGREEMENT
# =============================================================================

def test_oracle_agreement_on_small_connected_graphs():
    for g in _connected_atlas(6):
        for mode in MODES:
            result = _search(g, mode)
            assert (result.verdict == "yes") == split_search_service.brute_force_oracle(g, mode), (mode, g.edges)
            if result.solution is not None:
                assert split_search_service.verify_split(g, result.solution, mode).ok


def test_oracle_agreement_on_random_graphs():
    rng = random.Random(7)
    for seed in range(500):
        g = Graph.from_networkx(nx.gnp_random_graph(7, rng.uniform(0.2, 0.6), seed=seed))
        for mode in MODES:
            assert (_search(g, mode).verdict == "yes") == split_search_service.brute_force_oracle(g, mode), (seed, mode)


def test_disjoint_yes_implies_nondisjoint_yes():
    for g in _connected_atlas(6):
        if _search(g, "disjoint").verdict == "yes":
            assert _search(g, "nondisjoint").verdict == "yes", g.edges


def test_k15_free_interval_graphs_are_nondisjoint_unit_2_interval():
    for seed in range(40):
        rep = generators_service.random_interval_rep(6 + seed % 7, 4, seed)
        g = interval_service.d_intersection_graph(rep)
        assert _search(g, "nondisjoint").verdict == "yes", seed


def test_parallel_search_agrees():
    for g, mode in ((COUNTEREXAMPLE, "nondisjoint"), (COUNTEREXAMPLE, "disjoint"), (generators_service.star(5), "disjoint")):
        serial = _search(g, mode).verdict
        assert split_search_service.search_split(g, mode, threads=2).verdict == serial


if __name__ == "__main__":
    print("🧪 Testing split checker...")
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
