#!/usr/bin/env python3
"""
Test Unitizer
Unit coordinates with the identical intersection pattern
"""

import os
import sys
from fractions import Fraction as F
from itertools import combinations

import networkx as nx

# Add the project directory to Python path
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from models import Interval
from services.construction_service import construction_service
from services.generators_service import generators_service
from services.interval_service import intersects
from services.unitizer_service import ClawPresent, unitizer_service


def _pattern(fam):
    return {frozenset((a, b)) for (a, x), (b, y) in combinations(fam, 2) if intersects(x, y)}


def _assert_unitized(fam, out):
    assert [label for label, _ in out] == [label for label, _ in fam]
    assert all(iv.length == 1 for _, iv in out)
    assert _pattern(out) == _pattern(fam)


def test_single_item():
    out = unitizer_service.unitize([("x", Interval(5, 9))])
    assert len(out) == 1 and out[0][0] == "x" and out[0][1].length == 1


def test_star_family():
    fam = [("a", Interval(0, 10)), ("b", Interval(1, 2)), ("c", Interval(3, 4))]
    out = unitizer_service.unitize(fam)
    _assert_unitized(fam, out)
    assert _pattern(out) == {frozenset("ab"), frozenset("ac")}


def test_claw_is_rejected():
    fam = [("a", Interval(0, 10)), ("b", Interval(1, 2)), ("c", Interval(3, 4)), ("d", Interval(5, 6))]
    try:
        unitizer_service.unitize(fam)
    except ClawPresent as e:
        assert e.center == "a" and sorted(e.leaves) == ["b", "c", "d"]
        return
    raise AssertionError("claw accepted")


def test_empty_family_and_duplicate_labels():
    assert unitizer_service.unitize([]) == []
    try:
        unitizer_service.unitize([(1, Interval(0, 1)), (1, Interval(2, 3))])
    except ValueError:
        return
    raise AssertionError("duplicate labels accepted")


def test_tangency_survives():
    fam = [(1, Interval(0, 1)), (2, Interval(1, 2)), (3, Interval(2, 3)), (4, Interval(F(7, 2), 4))]
    out = unitizer_service.unitize(fam)
    _assert_unitized(fam, out)
    assert frozenset((1, 2)) in _pattern(out) and frozenset((1, 3)) not in _pattern(out)


def test_twins_get_identical_neighbourhoods():
    fam = [(1, Interval(0, 3)), (2, Interval(0, 3)), (3, Interval(2, 5)), (4, Interval(4, 8)), (5, Interval(-1, 0))]
    out = unitizer_service.unitize(fam)
    _assert_unitized(fam, out)
    pattern = _pattern(out)
    for other in (3, 4, 5):
        assert (frozenset((1, other)) in pattern) == (frozenset((2, other)) in pattern)


def test_left_endpoints_of_networkx_path():
    graph = nx.path_graph(["p", "q", "r", "s"])
    left = unitizer_service.left_endpoints(graph)
    fam = [(v, Interval(left[v], left[v] + 1)) for v in graph]
    assert _pattern(fam) == {frozenset(e) for e in graph.edges()}


def test_random_construction_families():
    for seed in range(500):
        d = 2 + seed % 2
        rep = generators_service.random_interval_rep(12 + seed % 25, 2 * d, seed)
        fam = construction_service.build_underlying_family(construction_service.plan_all(rep))
        out = unitizer_service.unitize(fam)
        _assert_unitized(fam, out)


if __name__ == "__main__":
    print("🧪 Testing unitizer...")
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
