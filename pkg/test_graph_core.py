#!/usr/bin/env python3
"""
Test Graph Core
Edge-list parsing, induced stars, maximal claws and E-claws
"""

import os
import sys
from itertools import combinations
from pathlib import Path

import networkx as nx

# Add the project directory to Python path
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from models import Graph, GraphError, StarWitness
from services.file_service import GraphFormatError, file_service
from services.generators_service import generators_service
from services.graph_service import graph_service

DATA = Path(__file__).resolve().parent / "data"
E_GRAPH = generators_service.e_graph()


def _atlas(max_nodes: int = 7):
    for graph in nx.graph_atlas_g():
        if 1 <= graph.number_of_nodes() <= max_nodes:
            yield Graph.from_networkx(graph)


# =============================================================================
# PARSING
# =============================================================================

def test_parse_path():
    g = file_service.parse_graph("p 3\ne 1 2\ne 2 3")
    assert g.n == 3
    assert g.edges == [(1, 2), (2, 3)]
    assert g.neighbors(2) == {1, 3}


def test_parse_ignores_comments_and_line_order():
    text = "# a comment\np 3\n\ne 2 3\n# another\ne 1 2\n"
    assert file_service.parse_graph(text) == file_service.parse_graph("p 3\ne 1 2\ne 2 3")


def test_parse_errors_carry_line_numbers():
    cases = {
        "p 2\ne 1 1": 2,        # self-loop
        "p 2\ne 1 3": 2,        # out of range
        "p 3\ne 1 2\ne 1 2": 3,  # duplicate
        "p 3\ne 1 2\ne 3 2": 3,  # reversed
        "p 3\ne 1 \u00b2": 2,     # non-ascii digit
        "p \u00b3\ne 1 2": 1,     # non-ascii header
        "p 2\nedge 1 2": 2,     # malformed
        "# c\nq 2": 2,          # bad header
    }
    for text, line in cases.items():
        try:
            file_service.parse_graph(text)
        except GraphFormatError as e:
            assert e.line == line, (text, e.line)
        else:
            raise AssertionError(f"no error for {text!r}")


def test_graph_rejects_invalid_edges():
    for edges in ([(1, 1)], [(1, 4)], [(1, 2), (2, 1)]):
        try:
            Graph(3, edges)
        except GraphError:
            continue
        raise AssertionError(f"accepted {edges}")


def test_shipped_counterexample_file():
    g = file_service.read_graph_file(DATA / "counterexample0.el")
    assert g == generators_service.counterexample_graph(0)
    assert (g.n, g.edge_count) == (14, 30)


def test_writer_sorts_edges_and_parses_back():
    g = generators_service.counterexample_graph(1)
    text = file_service.write_graph(g, comment="variant a")
    lines = [line for line in text.splitlines() if line.startswith("e ")]
    assert lines == sorted(lines, key=lambda line: tuple(map(int, line.split()[1:])))
    assert file_service.parse_graph(text) == g


# =============================================================================
# STARS AND CLAWS
# =============================================================================

def test_counterexample_is_k15_free():
    g = generators_service.counterexample_graph(0)
    assert graph_service.has_induced_star(g, 5) is None


def test_counterexample_has_k14():
    g = generators_service.counterexample_graph(0)
    found = graph_service.has_induced_star(g, 4)
    assert found is not None and found.t == 4
    assert graph_service.is_induced_star(g, found)
    assert graph_service.is_induced_star(g, StarWitness(3, (4, 6, 9, 11)))


def test_triangle_has_no_claw():
    assert graph_service.has_induced_star(generators_service.cycle(3), 3) is None


def test_star_search_rejects_non_positive_t():
    try:
        graph_service.has_induced_star(generators_service.path(3), 0)
    except ValueError:
        return
    raise AssertionError("t=0 accepted")


def test_star_freeness_is_monotone_in_t():
    for g in _atlas():
        free = False
        for t in range(1, 7):
            witness = graph_service.has_induced_star(g, t)
            if free:
                assert witness is None
            elif witness is None:
                free = True
            else:
                assert graph_service.is_induced_star(g, witness)


def test_maximal_claws():
    g = generators_service.counterexample_graph(0)
    assert graph_service.is_maximal_claw(g, StarWitness(8, (1, 9, 10)))
    assert not graph_service.is_maximal_claw(g, StarWitness(3, (4, 6, 9)))
    assert graph_service.claw_extension(g, StarWitness(3, (4, 6, 9))) == 10
    assert graph_service.is_induced_star(g, StarWitness(3, (4, 6, 9, 11)))
    k13 = generators_service.star(3)
    assert graph_service.is_maximal_claw(k13, StarWitness(1, (2, 3, 4)))


def test_maximal_claw_rejects_invalid_witness():
    try:
        graph_service.is_maximal_claw(generators_service.cycle(3), StarWitness(1, (2, 3)))
    except GraphError:
        return
    raise AssertionError("invalid witness accepted")


# =============================================================================
# E-CLAWS
# =============================================================================

def test_e_graph_is_not_e_claw_free():
    free, witness = graph_service.is_e_claw_free(E_GRAPH)
    assert not free
    assert sorted(witness) == [1, 2, 3, 4, 5, 6]
    assert graph_service.is_induced_e_graph(E_GRAPH, witness)


def test_k13_is_e_claw_free():
    assert graph_service.is_e_claw_free(generators_service.star(3)) == (True, None)


def test_counterexample_e_claw():
    g = generators_service.counterexample_graph(0)
    free, witness = graph_service.is_e_claw_free(g)
    assert not free
    assert graph_service.is_induced_e_graph(g, witness)
    assert graph_service.is_maximal_claw(g, StarWitness(witness[2], (witness[1], witness[3], witness[5])))
    assert graph_service.is_induced_e_graph(g, [2, 1, 8, 10, 14, 9])


def _e_claw_oracle(g: Graph) -> bool:
    """True iff some 6-set induces an E graph whose claw is maximal in g"""
    graph = g.to_networkx()
    pattern = E_GRAPH.to_networkx()
    for subset in combinations(g.vertices, 6):
        sub = graph.subgraph(subset)
        if not nx.is_isomorphic(sub, pattern):
            continue
        center = next(v for v in subset if sub.degree(v) == 3)
        leaves = set(sub[center])
        extendable = any(
            x not in leaves and not (g.neighbors(x) & leaves)
            for x in g.neighbors(center)
        )
        if not extendable:
            return True
    return False


def test_e_claw_detection_matches_oracle_on_small_graphs():
    for g in _atlas(7):
        if g.n < 6:
            assert graph_service.is_e_claw_free(g)[0]
            continue
        free, witness = graph_service.is_e_claw_free(g)
        assert free == (not _e_claw_oracle(g)), g.edges
        if witness is not None:
            assert graph_service.is_induced_e_graph(g, witness)


if __name__ == "__main__":
    print("🧪 Testing graph core...")
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
