"""
Graph Analysis Service
Induced stars, maximal claws and E-claws

An E graph is the path v1-v2-v3-v4-v5 plus the edge v3-v6; an E-claw is a
maximal 3-claw sitting inside an induced E graph (centre v3, leaves v2, v4, v6).
"""

import logging
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from models import Graph, GraphError, StarWitness

logger = logging.getLogger(__name__)

E_GRAPH_EDGES = ((1, 2), (2, 3), (3, 4), (4, 5), (3, 6))


class GraphService:
    """Exhaustive induced-subgraph checks used across the toolkit"""

    # =============================================================================
    # STARS
    # =============================================================================

    def has_induced_star(self, g: Graph, t: int) -> Optional[StarWitness]:
        """Find an induced K_{1,t}.

        Centres are tried in ascending order and, per centre, independent subsets
        of the neighbourhood are grown depth-first with early exit.

        Args:
            g: The graph
            t: Number of leaves (t >= 1)

        Returns:
            A witness, or None if g is K_{1,t}-free
        """
        if t < 1:
            raise ValueError(f"t must be positive, got {t}")

        for center in g.vertices:
            nbrs = sorted(g.neighbors(center))
            if len(nbrs) < t:
                continue
            leaves = self._independent_subset(g, nbrs, t)
            if leaves is not None:
                return StarWitness(center, tuple(leaves))
        return None

    def has_induced_star_at(self, g: Graph, center: int, t: int) -> Optional[StarWitness]:
        """Induced K_{1,t} with the given centre, or None"""
        leaves = self._independent_subset(g, sorted(g.neighbors(center)), t)
        return StarWitness(center, tuple(leaves)) if leaves is not None else None

    def _independent_subset(self, g: Graph, candidates: Sequence[int], size: int) -> Optional[List[int]]:
        chosen: List[int] = []

        def grow(start: int) -> bool:
            if len(chosen) == size:
                return True
            # not enough candidates left to reach the size
            for i in range(start, len(candidates) - (size - len(chosen)) + 1):
                x = candidates[i]
                if any(g.has_edge(x, y) for y in chosen):
                    continue
                chosen.append(x)
                if grow(i + 1):
                    return True
                chosen.pop()
            return False

        return list(chosen) if grow(0) else None

    def is_induced_star(self, g: Graph, w: StarWitness) -> bool:
        if w.center not in g.vertices or len(set(w.leaves)) != len(w.leaves):
            return False
        if any(x == w.center or not g.has_edge(w.center, x) for x in w.leaves):
            return False
        return not any(g.has_edge(x, y) for x, y in combinations(w.leaves, 2))

    def claw_extension(self, g: Graph, w: StarWitness) -> Optional[int]:
        """Smallest vertex extending w to an induced K_{1,t+1} with the same centre"""
        if not self.is_induced_star(g, w):
            raise GraphError(f"{w} is not an induced star")
        leaves = set(w.leaves)
        for x in sorted(g.neighbors(w.center) - leaves):
            if not (g.neighbors(x) & leaves):
                return x
        return None

    def is_maximal_claw(self, g: Graph, w: StarWitness) -> bool:
        return self.claw_extension(g, w) is None

    def maximal_claws(self, g: Graph, t: int = 3, center: Optional[int] = None) -> Iterator[StarWitness]:
        """Enumerate the maximal induced K_{1,t} (leaves ascending, each leaf set once)"""
        centers = [center] if center is not None else list(g.vertices)
        for c in centers:
            nbrs = sorted(g.neighbors(c))
            for leaves in combinations(nbrs, t):
                if any(g.has_edge(x, y) for x, y in combinations(leaves, 2)):
                    continue
                w = StarWitness(c, leaves)
                if self.is_maximal_claw(g, w):
                    yield w

    def claw_center_counts(self, g: Graph) -> Dict[int, int]:
        """Number of maximal 3-claws centred at each vertex"""
        counts = {v: 0 for v in g.vertices}
        for w in self.maximal_claws(g, 3):
            counts[w.center] += 1
        return counts

    # =============================================================================
    # E-CLAWS
    # =============================================================================

    def is_induced_e_graph(self, g: Graph, path: Sequence[int]) -> bool:
        """True iff path = (v1..v6) induces exactly the E graph edges"""
        if len(path) != 6 or len(set(path)) != 6:
            return False
        wanted = {frozenset((path[a - 1], path[b - 1])) for a, b in E_GRAPH_EDGES}
        for x, y in combinations(path, 2):
            if g.has_edge(x, y) != (frozenset((x, y)) in wanted):
                return False
        return True

    def iter_e_claws(self, g: Graph) -> Iterator[List[int]]:
        """Yield every E-claw witness as [v1, v2, v3, v4, v5, v6] with v3 the claw centre"""
        for claw in self.maximal_claws(g, 3):
            c = claw.center
            closed_c = g.neighbors(c) | {c}
            for z in claw.leaves:
                a, b = [x for x in claw.leaves if x != z]
                for left, right in ((a, b), (b, a)):
                    outside = closed_c | g.neighbors(z) | {z}
                    for p in sorted(g.neighbors(left) - outside - g.neighbors(right) - {right}):
                        banned = outside | g.neighbors(left) | g.neighbors(p) | {left, p}
                        for q in sorted(g.neighbors(right) - banned):
                            yield [p, left, c, right, q, z]

    def find_e_claw(self, g: Graph) -> Optional[List[int]]:
        return next(self.iter_e_claws(g), None)

    def is_e_claw_free(self, g: Graph) -> Tuple[bool, Optional[List[int]]]:
        """
        Check a graph for E-claws

        Returns:
            (free, witness) where witness lists the six E-graph vertices in path order
        """
        witness = self.find_e_claw(g)
        if witness is not None:
            logger.debug(f"E-claw found: {witness}")
        return witness is None, witness


# Global graph service instance
graph_service = GraphService()
