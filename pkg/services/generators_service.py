"""
Generators Service
Named graphs and representations (the 14-vertex counterexample family, the
algorithm figure instance, the balanced gadget) plus seeded random instances
"""

import logging
import random
from fractions import Fraction
from typing import Dict, List, Tuple

import networkx as nx

from models import DIntervalRep, Graph, Interval

logger = logging.getLogger(__name__)

COUNTEREXAMPLE_EDGES: Tuple[Tuple[int, int], ...] = (
    (8, 1), (8, 3), (8, 7), (8, 9), (8, 10),
    (9, 3), (9, 7),
    (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7),
    (10, 3), (10, 7), (10, 11), (10, 12), (10, 13), (10, 14),
    (3, 4), (3, 5), (3, 6), (3, 7), (3, 11),
    (5, 6), (5, 7),
    (7, 11), (7, 12), (7, 13),
    (11, 12),
)

# extra edges of the five variants, (a) .. (e)
VARIANT_EXTRA_EDGES: Dict[int, Tuple[Tuple[int, int], ...]] = {
    0: (),
    1: ((11, 13), (11, 14), (5, 4), (5, 2)),
    2: ((11, 13), (5, 4), (5, 2)),
    3: ((5, 4), (5, 2)),
    4: ((11, 13), (5, 4)),
    5: ((5, 4),),
}


def _iv(l, r) -> Interval:
    return Interval(Fraction(l), Fraction(r))


class GeneratorsService:
    """Constructors for the named instances and random families"""

    # =============================================================================
    # COUNTEREXAMPLE FAMILY
    # =============================================================================

    def counterexample_graph(self, variant: int = 0) -> Graph:
        """
        The 14-vertex interval, K_{1,5}-free graph or one of its five variants

        Args:
            variant: 0 for the base graph, 1..5 for the variants with extra edges

        Raises:
            ValueError: Unknown variant
        """
        if variant not in VARIANT_EXTRA_EDGES:
            raise ValueError(f"Unknown counterexample variant {variant}, expected 0..5")
        return Graph(14, COUNTEREXAMPLE_EDGES + VARIANT_EXTRA_EDGES[variant])

    def counterexample_interval_rep(self) -> DIntervalRep:
        return DIntervalRep.single({
            8: _iv(-3, 3), 1: _iv(-10, -2), 9: _iv(-1, 1), 10: _iv(2, 10),
            2: _iv(-10, -9), 4: _iv(-8, -7), 6: _iv(-6, -5), 5: _iv(-6, -4),
            14: _iv(9, 10), 13: _iv(7, 8), 12: _iv(5, 6), 11: _iv(4, 6),
            3: _iv(-8, Fraction(9, 2)), 7: _iv(Fraction(-9, 2), 8),
        })

    def counterexample_unit_rep(self) -> DIntervalRep:
        """Hand-placed 2-interval picture of the counterexample; schematic, so lengths are not all 1"""
        return DIntervalRep(2, {
            8: [_iv(-3, 1), _iv(-1, 3)],
            1: [_iv(-10, -7), _iv(-6, -2)],
            9: [_iv(-1, 1)],
            10: [_iv(2, 6), _iv(7, 10)],
            2: [_iv(-10, -9)],
            4: [_iv(-8, -7)],
            6: [_iv(-6, -5)],
            5: [_iv(-6, -4)],
            14: [_iv(9, 10)],
            13: [_iv(7, 8)],
            12: [_iv(5, 6)],
            11: [_iv(4, 6)],
            3: [_iv(-8, -5), _iv(-1, Fraction(9, 2))],
            7: [_iv(Fraction(-9, 2), 1), _iv(5, 8)],
        })

    def counterexample_d(self, d: int) -> Graph:
        """Base counterexample plus 2d-4 common neighbours of {1, 3} and 2d-4 of {7, 10}"""
        if d < 2:
            raise ValueError(f"d must be at least 2, got {d}")
        extra = 2 * d - 4
        edges = list(COUNTEREXAMPLE_EDGES)
        for k in range(extra):
            edges += [(1, 15 + k), (3, 15 + k)]
        for k in range(extra):
            edges += [(7, 15 + extra + k), (10, 15 + extra + k)]
        return Graph(14 + 2 * extra, edges)

    def alg_figure_rep(self) -> Tuple[DIntervalRep, int]:
        """
        The construction figure instance: vertex 1 meets eight disjoint intervals

        Returns:
            (representation, centre vertex id)
        """
        intervals = [
            (-10, 18),
            (-11, -8), (-7, -4), (-3, 0), (1, 3), (4, 7), (8, 11), (12, 15), (16, 19),
            (-9, -6), (-5, -2), (-1, 2), (Fraction(5, 2), 6), (11, 14), (15, 18),
        ]
        return DIntervalRep.single({i: _iv(l, r) for i, (l, r) in enumerate(intervals, start=1)}), 1

    # =============================================================================
    # BALANCED GADGET
    # =============================================================================

    def balanced_gadget(self, d: int) -> Graph:
        """
        Chain of five K_{d^2+d-1, d+1} blocks with the six attached vertices

        Block i holds f_i^1..f_i^F then t_i^1..t_i^{d+1}; v_1..v_6 follow the
        blocks, then d-2 pendants of v_1 and d-3 pendants of v_2.  v_5 and v_6
        see f_2 ranges plus two shared f_4 vertices.
        """
        if d < 3:
            raise ValueError(f"d must be at least 3, got {d}")
        F, T = d * d + d - 1, d + 1
        block = F + T

        def f(i: int, j: int) -> int:
            return (i - 1) * block + j

        def t(i: int, k: int) -> int:
            return (i - 1) * block + F + k

        def whole(i: int) -> List[int]:
            return list(range((i - 1) * block + 1, i * block + 1))

        v = {k: 5 * block + k for k in range(1, 7)}
        n = 5 * block + 6
        edges: List[Tuple[int, int]] = []

        for i in range(1, 6):
            edges += [(f(i, j), t(i, k)) for j in range(1, F + 1) for k in range(1, T + 1)]
        edges += [(f(i, F), f(i + 1, 1)) for i in range(1, 5)]

        for hub in (v[1], v[2]):
            edges += [(hub, x) for x in whole(2) + whole(4)]
            edges += [(hub, v[k]) for k in range(3, 7)]
        edges += [(v[1], f(3, F)), (v[1], f(5, 1)), (v[1], v[2])]
        edges += [(v[2], f(1, F)), (v[2], f(3, 1))]

        edges += [(v[3], f(3, F)), (v[3], t(3, T)), (v[3], t(4, 1))]
        edges += [(v[3], f(4, j)) for j in range(1, d * d - d + 4)]
        edges += [(v[4], f(5, 1)), (v[4], t(4, T)), (v[4], t(5, 1))]
        edges += [(v[4], f(4, j)) for j in range(2 * d - 3, F + 1)]

        shared = [f(4, d * d - d + 2), f(4, d * d - d + 3)]
        edges += [(v[5], f(1, F)), (v[5], t(1, d)), (v[5], t(2, 1))]
        edges += [(v[5], f(2, j)) for j in range(1, d * d - d + 2)] + [(v[5], x) for x in shared]
        edges += [(v[6], f(3, 1)), (v[6], t(2, T)), (v[6], t(3, 1))]
        edges += [(v[6], f(2, j)) for j in range(2 * d - 1, F + 1)] + [(v[6], x) for x in shared]

        for owner, count in ((v[1], d - 2), (v[2], d - 3)):
            for _ in range(count):
                n += 1
                edges.append((owner, n))
        return Graph(n, edges)

    # =============================================================================
    # SMALL NAMED GRAPHS
    # =============================================================================

    def complete_bipartite(self, a: int, b: int) -> Graph:
        if a < 0 or b < 0:
            raise ValueError(f"Part sizes must be non-negative, got {a},{b}")
        return Graph.from_networkx(nx.complete_bipartite_graph(a, b))

    def e_graph(self) -> Graph:
        """Path 1-2-3-4-5 plus the edge 3-6"""
        return Graph(6, [(1, 2), (2, 3), (3, 4), (4, 5), (3, 6)])

    def star(self, t: int) -> Graph:
        """Centre 1, leaves 2..t+1"""
        if t < 0:
            raise ValueError(f"A star needs a non-negative leaf count, got {t}")
        return Graph.from_networkx(nx.star_graph(t))

    def path(self, n: int) -> Graph:
        if n < 0:
            raise ValueError(f"A path needs a non-negative vertex count, got {n}")
        return Graph.from_networkx(nx.path_graph(n))

    def cycle(self, n: int) -> Graph:
        if n < 3:
            raise ValueError(f"A cycle needs at least 3 vertices, got {n}")
        return Graph.from_networkx(nx.cycle_graph(n))

    # =============================================================================
    # RANDOM INSTANCES
    # =============================================================================

    def random_interval_rep(self, n: int, max_m: int, seed: int) -> DIntervalRep:
        """
        Seeded random one-interval representation with every m <= max_m

        Integer endpoints; lengths lie in [4, 5*max_m - 5], which bounds the
        number of pairwise disjoint neighbours of any interval by max_m.  For
        max_m = 1 the family is a union of far-apart cliques and for max_m = 0
        the intervals are pairwise disjoint.
        """
        if n < 0 or max_m < 0:
            raise ValueError(f"n and max_m must be non-negative, got {n},{max_m}")
        rng = random.Random(seed)
        intervals: Dict[int, Interval] = {}

        if max_m == 0:
            for v in range(1, n + 1):
                intervals[v] = _iv(3 * v, 3 * v + rng.randint(0, 1))
        elif max_m == 1:
            groups = max(1, n // 3)
            for v in range(1, n + 1):
                center = 10 * rng.randrange(groups)
                intervals[v] = _iv(center - rng.randint(0, 3), center + rng.randint(0, 3))
        else:
            longest = max(4, 5 * max_m - 5)
            span = max(8, 3 * n)
            for v in range(1, n + 1):
                left = rng.randint(0, span)
                intervals[v] = _iv(left, left + rng.randint(4, longest))

        logger.debug(f"random_interval_rep(n={n}, max_m={max_m}, seed={seed})")
        return DIntervalRep.single(intervals)


# Global generators service instance
generators_service = GeneratorsService()
