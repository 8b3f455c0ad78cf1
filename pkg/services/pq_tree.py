"""
PQ-tree over a finite universe, supporting the reduce operation of
Booth and Lueker through the usual P/Q templates.

The tree represents every permutation of the universe in which all reduced
sets so far are consecutive.  Subtree statistics are recomputed per call,
which costs O(size of tree) per reduction.
"""

import logging
from typing import Dict, Hashable, Iterable, List, Optional, Set

logger = logging.getLogger(__name__)

EMPTY, PARTIAL, FULL = 0, 1, 2


class PQNode:
    __slots__ = ("kind", "children", "value")

    def __init__(self, kind: str, children: Optional[List["PQNode"]] = None, value: Hashable = None):
        self.kind = kind  # "P", "Q" or "L"
        self.children = children or []
        self.value = value

    def __repr__(self) -> str:
        if self.kind == "L":
            return repr(self.value)
        inner = " ".join(repr(child) for child in self.children)
        return f"({inner})" if self.kind == "P" else f"[{inner}]"


class ReductionFailed(Exception):
    """Raised internally when no template applies"""
    pass


class PQTree:
    def __init__(self, universe: Iterable[Hashable]):
        leaves = [PQNode("L", value=x) for x in universe]
        if not leaves:
            self.root: Optional[PQNode] = None
        elif len(leaves) == 1:
            self.root = leaves[0]
        else:
            self.root = PQNode("P", leaves)
        self._status: Dict[int, int] = {}

    # =============================================================================
    # PUBLIC API
    # =============================================================================

    def reduce(self, subset: Iterable[Hashable]) -> bool:
        """Restrict the tree to permutations where subset is consecutive; False if impossible"""
        targets = set(subset)
        if len(targets) <= 1 or self.root is None:
            return True

        counts: Dict[int, int] = {}
        self._status = {}
        self._mark(self.root, targets, counts)

        parent, index, node = None, -1, self.root
        while True:
            inner = [i for i, child in enumerate(node.children) if counts[id(child)] == len(targets)]
            if not inner:
                break
            parent, index, node = node, inner[0], node.children[inner[0]]

        try:
            replacement = self._reduce_root(node)
        except ReductionFailed:
            logger.debug(f"PQ reduction failed for {sorted(targets, key=repr)}")
            return False

        if replacement is not node:
            if parent is None:
                self.root = replacement
            else:
                parent.children[index] = replacement
        return True

    def frontier(self) -> List[Hashable]:
        out: List[Hashable] = []
        stack = [self.root] if self.root is not None else []
        while stack:
            node = stack.pop()
            if node.kind == "L":
                out.append(node.value)
            else:
                stack.extend(reversed(node.children))
        return out

    # =============================================================================
    # MARKING
    # =============================================================================

    def _mark(self, root: PQNode, targets: Set[Hashable], counts: Dict[int, int]) -> None:
        sizes: Dict[int, int] = {}
        stack = [(root, False)]
        while stack:
            node, expanded = stack.pop()
            if node.kind == "L":
                sizes[id(node)] = 1
                counts[id(node)] = 1 if node.value in targets else 0
            elif not expanded:
                stack.append((node, True))
                stack.extend((child, False) for child in node.children)
                continue
            else:
                sizes[id(node)] = sum(sizes[id(c)] for c in node.children)
                counts[id(node)] = sum(counts[id(c)] for c in node.children)
            hit = counts[id(node)]
            self._status[id(node)] = EMPTY if hit == 0 else FULL if hit == sizes[id(node)] else PARTIAL

    def _status_of(self, node: PQNode) -> int:
        return self._status[id(node)]

    @staticmethod
    def _group(nodes: List[PQNode]) -> PQNode:
        return nodes[0] if len(nodes) == 1 else PQNode("P", list(nodes))

    # =============================================================================
    # TEMPLATES
    # =============================================================================

    def _partial_sequence(self, node: PQNode) -> List[PQNode]:
        """Children sequence, empty side first, for a partial node below the pertinent root"""
        empties = [c for c in node.children if self._status_of(c) == EMPTY]
        fulls = [c for c in node.children if self._status_of(c) == FULL]
        partials = [c for c in node.children if self._status_of(c) == PARTIAL]

        if node.kind == "P":
            if len(partials) > 1:
                raise ReductionFailed()
            middle = self._partial_sequence(partials[0]) if partials else []
            return ([self._group(empties)] if empties else []) + middle + ([self._group(fulls)] if fulls else [])

        for children in (node.children, node.children[::-1]):
            statuses = [self._status_of(c) for c in children]
            if self._is_empty_then_full(statuses):
                sequence: List[PQNode] = []
                for child, status in zip(children, statuses):
                    if status == PARTIAL:
                        sequence.extend(self._partial_sequence(child))
                    else:
                        sequence.append(child)
                return sequence
        raise ReductionFailed()

    @staticmethod
    def _is_empty_then_full(statuses: List[int]) -> bool:
        """Pattern EMPTY* PARTIAL? FULL*"""
        i, n = 0, len(statuses)
        while i < n and statuses[i] == EMPTY:
            i += 1
        if i < n and statuses[i] == PARTIAL:
            i += 1
        while i < n and statuses[i] == FULL:
            i += 1
        return i == n

    def _reduce_root(self, node: PQNode) -> PQNode:
        if node.kind == "L":
            return node

        empties = [c for c in node.children if self._status_of(c) == EMPTY]
        fulls = [c for c in node.children if self._status_of(c) == FULL]
        partials = [c for c in node.children if self._status_of(c) == PARTIAL]

        if node.kind == "P":
            if len(partials) > 2:
                raise ReductionFailed()
            if not partials:
                if empties and len(fulls) > 1:
                    node.children = empties + [self._group(fulls)]
                return node
            sequence = self._partial_sequence(partials[0])
            if fulls:
                sequence.append(self._group(fulls))
            if len(partials) == 2:
                sequence.extend(reversed(self._partial_sequence(partials[1])))
            chain = PQNode("Q", sequence)
            if not empties:
                return chain
            node.children = empties + [chain]
            return node

        statuses = [self._status_of(c) for c in node.children]
        touched = [i for i, s in enumerate(statuses) if s != EMPTY]
        lo, hi = touched[0], touched[-1]
        if any(statuses[i] != FULL for i in range(lo + 1, hi)):
            raise ReductionFailed()
        children: List[PQNode] = list(node.children[:lo])
        if statuses[lo] == PARTIAL:
            children.extend(self._partial_sequence(node.children[lo]))
        else:
            children.append(node.children[lo])
        children.extend(node.children[lo + 1:hi])
        if hi > lo:
            if statuses[hi] == PARTIAL:
                children.extend(reversed(self._partial_sequence(node.children[hi])))
            else:
                children.append(node.children[hi])
        children.extend(node.children[hi + 1:])
        node.children = children
        return node
