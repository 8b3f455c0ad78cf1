"""
Recognition Service
Interval graph recognition (networkx chordality and maximal cliques, consecutive cliques via
a PQ-tree) and unit interval recognition (three LexBFS sweeps)
"""

import logging
from fractions import Fraction
from typing import Dict, FrozenSet, Hashable, Iterable, List, Mapping, Optional, Sequence

import networkx as nx

from models import DIntervalRep, Graph, Interval, ProperOrder
from services.interval_service import interval_service
from services.pq_tree import PQTree

logger = logging.getLogger(__name__)

Adjacency = Mapping[Hashable, Iterable[Hashable]]


class _Cell:
    """A class of the LexBFS partition; items keep their initial rank order, stale entries are skipped"""
    __slots__ = ("items", "head", "size", "prev", "next")

    def __init__(self, items: List[Hashable]):
        self.items = items
        self.head = 0
        self.size = len(items)
        self.prev: Optional["_Cell"] = None
        self.next: Optional["_Cell"] = None


def lexbfs(adjacency: Adjacency, initial: Sequence[Hashable]) -> List[Hashable]:
    """Lexicographic BFS by partition refinement.

    Ties are resolved by the position in `initial` (earliest first), so passing
    a reversed previous sweep yields LexBFS+.
    """
    rank = {v: i for i, v in enumerate(initial)}
    sentinel = _Cell([])
    first = _Cell(list(initial))
    sentinel.next, first.prev = first, sentinel
    cell_of: Dict[Hashable, Optional[_Cell]] = {v: first for v in initial}
    order: List[Hashable] = []

    while len(order) < len(initial):
        cell = sentinel.next
        while cell.size == 0:
            # drop exhausted cells from the front
            sentinel.next = cell.next
            cell.next.prev = sentinel
            cell = cell.next
        while cell_of[cell.items[cell.head]] is not cell:
            cell.head += 1
        pivot = cell.items[cell.head]
        cell.head += 1
        cell.size -= 1
        cell_of[pivot] = None
        order.append(pivot)

        groups: Dict[_Cell, List[Hashable]] = {}
        for w in adjacency[pivot]:
            owner = cell_of.get(w)
            if owner is not None:
                groups.setdefault(owner, []).append(w)
        for owner, moved in groups.items():
            if len(moved) == owner.size:
                continue
            front = _Cell(sorted(moved, key=rank.__getitem__))
            for w in moved:
                cell_of[w] = front
            owner.size -= len(moved)
            front.prev, front.next = owner.prev, owner
            owner.prev.next = front
            owner.prev = front
    return order


def connected_components(adjacency: Adjacency, vertices: Sequence[Hashable]) -> List[List[Hashable]]:
    """Components in order of their first vertex in `vertices`; members in that order too"""
    index = {v: i for i, v in enumerate(vertices)}
    graph = nx.Graph()
    graph.add_nodes_from(vertices)
    graph.add_edges_from((v, w) for v in vertices for w in adjacency[v])
    components = [sorted(members, key=index.__getitem__) for members in nx.connected_components(graph)]
    components.sort(key=lambda members: index[members[0]])
    return components


def is_consecutive_order(adjacency: Adjacency, order: Sequence[Hashable]) -> bool:
    """True iff every closed neighbourhood occupies consecutive positions of order"""
    position = {v: i for i, v in enumerate(order)}
    for v in order:
        spots = [position[w] for w in adjacency[v]]
        spots.append(position[v])
        if max(spots) - min(spots) + 1 != len(spots):
            return False
    return True


def proper_order(adjacency: Adjacency, vertices: Optional[Sequence[Hashable]] = None) -> Optional[List[Hashable]]:
    """Consecutive (umbrella) ordering of a unit interval graph, or None.

    Each component gets LexBFS, LexBFS+, LexBFS+; the concatenated result is
    verified directly.
    """
    vertices = list(adjacency) if vertices is None else list(vertices)
    order: List[Hashable] = []
    for component in connected_components(adjacency, vertices):
        sweep = lexbfs(adjacency, component)
        for _ in range(2):
            sweep = lexbfs(adjacency, sweep[::-1])
        order.extend(sweep)
    return order if is_consecutive_order(adjacency, order) else None


class RecognitionService:
    """Interval and unit interval recognition on Graph values"""

    # =============================================================================
    # CHORDALITY
    # =============================================================================

    def is_chordal(self, g: Graph) -> bool:
        return nx.is_chordal(g.to_networkx())

    def maximal_cliques(self, g: Graph) -> Optional[List[FrozenSet[int]]]:
        """Maximal cliques of a chordal graph sorted by member ids, or None when g has a chordless cycle"""
        graph = g.to_networkx()
        if not nx.is_chordal(graph):
            return None
        return sorted(nx.chordal_graph_cliques(graph), key=sorted)

    # =============================================================================
    # INTERVAL GRAPHS
    # =============================================================================

    def recognize_interval(self, g: Graph) -> Optional[DIntervalRep]:
        """
        Recognize an interval graph

        Args:
            g: The graph

        Returns:
            A one-interval representation with integer clique-index endpoints, or None
        """
        if g.n == 0:
            return DIntervalRep(1, {})

        cliques = self.maximal_cliques(g)
        if cliques is None:
            logger.debug(f"{g} is not chordal")
            return None

        containing: Dict[int, List[int]] = {v: [] for v in g.vertices}
        for index, clique in enumerate(cliques):
            for v in clique:
                containing[v].append(index)

        tree = PQTree(range(len(cliques)))
        for v in g.vertices:
            if not tree.reduce(containing[v]):
                logger.debug(f"{g}: cliques of vertex {v} cannot be made consecutive")
                return None

        slot = {clique: i + 1 for i, clique in enumerate(tree.frontier())}
        rep = DIntervalRep.single({
            v: Interval(Fraction(min(slot[c] for c in containing[v])), Fraction(max(slot[c] for c in containing[v])))
            for v in g.vertices
        })
        if interval_service.d_intersection_graph(rep) != g:
            logger.error(f"Clique arrangement for {g} does not reproduce the graph")
            return None
        return rep

    # =============================================================================
    # UNIT INTERVAL GRAPHS
    # =============================================================================

    def recognize_proper_order(self, g: Graph) -> Optional[ProperOrder]:
        order = proper_order(g.adjacency(), list(g.vertices))
        return ProperOrder(tuple(order)) if order is not None else None


# Global recognition service instance
recognition_service = RecognitionService()
