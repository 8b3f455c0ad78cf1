"""
Unitizer Service
Turns a labelled interval family whose intersection graph is claw-free into
unit intervals with the identical intersection pattern
"""

import logging
from fractions import Fraction
from typing import Dict, Hashable, List, Optional, Sequence, Tuple

import networkx as nx

from models import Interval, Label, LabeledFamily
from services.interval_service import family_intersections
from services.recognition_service import proper_order

logger = logging.getLogger(__name__)


class ClawPresent(ValueError):
    """Raised when an item meets three pairwise disjoint items"""

    def __init__(self, center: Label, leaves: Sequence[Label]):
        self.center = center
        self.leaves = list(leaves)
        super().__init__(f"item {center!r} meets pairwise disjoint items {self.leaves!r}")


class InfeasibleOrder(RuntimeError):
    """Raised when the unit coordinates fail self-verification"""
    pass


def _sort_key(label: Label):
    return (type(label).__name__, label) if isinstance(label, (int, tuple, str)) else (type(label).__name__, repr(label))


class UnitizerService:
    """Unit interval coordinates from a proper order"""

    def intersection_graph(self, fam: LabeledFamily) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(label for label, _ in fam)
        graph.add_edges_from(family_intersections(fam))
        return graph

    def find_claw(self, fam: LabeledFamily, graph: nx.Graph) -> Optional[Tuple[Label, List[Label]]]:
        """First item (in family order) meeting three pairwise disjoint items, by earliest-end greedy"""
        intervals = dict(fam)
        for label, _ in fam:
            chosen: List[Label] = []
            last_r: Optional[Fraction] = None
            for other in sorted(graph[label], key=lambda x: (intervals[x].r, _sort_key(x))):
                if last_r is None or intervals[other].l > last_r:
                    chosen.append(other)
                    last_r = intervals[other].r
                    if len(chosen) == 3:
                        return label, chosen
        return None

    # =============================================================================
    # COORDINATES
    # =============================================================================

    def component_offsets(self, order: Sequence[Label], graph: nx.Graph) -> Tuple[Dict[Label, int], List[List[Label]]]:
        """Split a connected umbrella order into levels.

        Level t starts at p_t and ends at the last neighbour of p_t; every level
        is a clique and only consecutive levels share edges.
        """
        position = {v: i for i, v in enumerate(order)}
        reach = [max([position[w] for w in graph[v]] + [i]) for i, v in enumerate(order)]
        level_of: Dict[Label, int] = {}
        levels: List[List[Label]] = []
        start = 0
        while start < len(order):
            end = reach[start]
            levels.append(list(order[start:end + 1]))
            for v in order[start:end + 1]:
                level_of[v] = len(levels) - 1
            start = end + 1
        return level_of, levels

    def fractional_ranks(self, order: Sequence[Label], levels: List[List[Label]], graph: nx.Graph) -> Dict[Label, int]:
        """Global order of fractional parts.

        An item of level t+1 sits just before the first item of level t reaching
        it, or after all of level t when none does.
        """
        position = {v: i for i, v in enumerate(order)}
        reach = {v: max([position[w] for w in graph[v]] + [position[v]]) for v in order}
        nxt: Dict[Label, Optional[Label]] = {}
        prv: Dict[Label, Optional[Label]] = {}
        head: Optional[Label] = None

        def link_after(anchor: Optional[Label], item: Label) -> None:
            nonlocal head
            follower = nxt[anchor] if anchor is not None else head
            prv[item], nxt[item] = anchor, follower
            if anchor is None:
                head = item
            else:
                nxt[anchor] = item
            if follower is not None:
                prv[follower] = item

        previous = None
        for item in levels[0]:
            nxt.setdefault(item, None)
            prv.setdefault(item, None)
            link_after(previous, item)
            previous = item

        for below, above in zip(levels, levels[1:]):
            pointer = 0
            tail = below[-1]
            for item in above:
                while pointer < len(below) and reach[below[pointer]] < position[item]:
                    pointer += 1
                if pointer < len(below):
                    link_after(prv[below[pointer]], item)
                else:
                    link_after(tail, item)
                    tail = item

        ranks: Dict[Label, int] = {}
        cursor, rank = head, 0
        while cursor is not None:
            ranks[cursor] = rank
            rank += 1
            cursor = nxt[cursor]
        return ranks

    def unitize(self, fam: LabeledFamily) -> LabeledFamily:
        """
        Unit intervals with the same pairwise intersections

        Args:
            fam: (label, interval) items, labels unique

        Returns:
            The same labels in the same order, every interval of length exactly 1

        Raises:
            ClawPresent: An item meets three pairwise disjoint items
            InfeasibleOrder: The produced coordinates do not reproduce the pattern
        """
        labels = [label for label, _ in fam]
        if len(set(labels)) != len(labels):
            raise ValueError("Family labels must be unique")
        if not fam:
            return []

        graph = self.intersection_graph(fam)
        claw = self.find_claw(fam, graph)
        if claw is not None:
            raise ClawPresent(*claw)

        left = self.left_endpoints(graph)
        result = [(label, Interval(left[label], left[label] + 1)) for label in labels]
        if set(map(frozenset, family_intersections(result))) != set(map(frozenset, graph.edges())):
            raise InfeasibleOrder("unit coordinates do not reproduce the intersection pattern")
        logger.debug(f"Unitized {len(fam)} intervals")
        return result

    def left_endpoints(self, graph: nx.Graph) -> Dict[Label, Fraction]:
        """
        Left endpoints of unit intervals realizing a unit interval graph

        Components are laid out by smallest label, each on its own range.

        Raises:
            InfeasibleOrder: Some component has no proper order
        """
        delta = Fraction(1, 2 * graph.number_of_nodes() + 2)
        components = sorted(
            (sorted(component, key=_sort_key) for component in nx.connected_components(graph)),
            key=lambda members: _sort_key(members[0]),
        )

        left: Dict[Label, Fraction] = {}
        base = 0
        for members in components:
            order = proper_order({v: graph[v] for v in members}, members)
            if order is None:
                raise InfeasibleOrder(f"component of {members[0]!r} has no proper order")
            level_of, levels = self.component_offsets(order, graph)
            ranks = self.fractional_ranks(order, levels, graph)
            for v in members:
                left[v] = base + level_of[v] + (ranks[v] + 1) * delta
            base += len(levels) + 2
        return left


# Global unitizer service instance
unitizer_service = UnitizerService()
