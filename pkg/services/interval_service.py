"""
Interval Representation Service
Intersection graphs, verification, normalization and balanced splitting of
d-interval representations, all in exact rational arithmetic
"""

import heapq
import logging
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Set, Tuple

from models import DIntervalRep, Graph, Interval, Label, LabeledFamily, RepresentationError
from schemas import VerifyReport

logger = logging.getLogger(__name__)


def intersects(a: Interval, b: Interval) -> bool:
    """Closed-interval intersection: shared endpoints count"""
    return max(a.l, b.l) <= min(a.r, b.r)


def family_intersections(family: LabeledFamily) -> Set[Tuple[Label, Label]]:
    """All intersecting label pairs of a family, by a left-to-right sweep.

    Pairs are returned in sweep order (earlier-starting label first).
    """
    order = sorted(range(len(family)), key=lambda i: (family[i][1].l, family[i][1].r, i))
    active: List[Tuple[Fraction, int]] = []
    pairs: Set[Tuple[Label, Label]] = set()
    for i in order:
        label, iv = family[i]
        while active and active[0][0] < iv.l:
            heapq.heappop(active)
        for _, j in active:
            pairs.add((family[j][0], label))
        heapq.heappush(active, (iv.r, i))
    return pairs


class IntervalService:
    """Operations on DIntervalRep values"""

    DUMMY_OFFSET = 2
    DUMMY_STRIDE = 3

    # =============================================================================
    # INTERSECTION GRAPHS
    # =============================================================================

    def d_intersection_graph(self, rep: DIntervalRep) -> Graph:
        """Graph on 1..max vertex id; u ~ v iff some interval of u meets some interval of v"""
        n = max(rep.vertices, default=0)
        edges = set()
        for (u, _), (v, _) in family_intersections(rep.underlying_family()):
            if u != v:
                edges.add((min(u, v), max(u, v)))
        return Graph(n, sorted(edges))

    def neighbors_of(self, rep: DIntervalRep, v: int) -> List[int]:
        target = rep.interval(v)
        return [u for u, ivs in rep.items() if u != v and any(intersects(target, iv) for iv in ivs)]

    def max_disjoint_intersecting(self, rep: DIntervalRep, v: int) -> Tuple[int, List[int]]:
        """
        Maximum number of pairwise disjoint intervals meeting the interval of v

        Earliest-right-endpoint greedy over N(v), ties by smaller vertex id.

        Returns:
            (m, witness vertex ids in left-to-right order)
        """
        target = rep.interval(v)
        candidates = sorted(
            ((rep.interval(u), u) for u in self.neighbors_of(rep, v)),
            key=lambda item: (item[0].r, item[1]),
        )
        witness: List[int] = []
        last_r: Optional[Fraction] = None
        for iv, u in candidates:
            if last_r is None or iv.l > last_r:
                witness.append(u)
                last_r = iv.r
        logger.debug(f"max_disjoint_intersecting({v}) on {target}: m={len(witness)}")
        return len(witness), witness

    # =============================================================================
    # VERIFICATION
    # =============================================================================

    def verify_representation(
        self,
        rep: DIntervalRep,
        g: Graph,
        require_unit: bool = False,
        require_disjoint: bool = False,
        require_balanced: bool = False,
    ) -> VerifyReport:
        report = VerifyReport()

        rep_vertices = set(rep.vertices)
        graph_vertices = set(g.vertices)
        if rep_vertices != graph_vertices:
            report.add(
                "vertex-set-mismatch",
                missing=sorted(graph_vertices - rep_vertices),
                extra=sorted(rep_vertices - graph_vertices),
            )

        produced = set(self.d_intersection_graph(rep).edges)
        expected = set(g.edges)
        for u, v in sorted(expected - produced):
            report.add("graph-mismatch-missing-edge", edge=[u, v])
        for u, v in sorted(produced - expected):
            report.add("graph-mismatch-extra-edge", edge=[u, v])

        for v, ivs in rep.items():
            if len(ivs) > rep.d:
                report.add("too-many-parts", vertex=v, parts=len(ivs), d=rep.d)
            if require_unit:
                for iv in ivs:
                    if iv.length != 1:
                        report.add("non-unit-length", vertex=v, interval=str(iv), length=str(iv.length))
            if require_disjoint:
                for a, b in combinations(ivs, 2):
                    if intersects(a, b):
                        report.add("same-vertex-overlap", vertex=v, intervals=[str(a), str(b)])
            if require_balanced and len({iv.length for iv in ivs}) > 1:
                report.add("not-balanced", vertex=v, lengths=[str(iv.length) for iv in ivs])

        if not report.ok:
            logger.info(f"Representation verification failed: {report.kinds()}")
        return report

    # =============================================================================
    # NORMALIZATION
    # =============================================================================

    def dummy_interval(self, anchor: Fraction, k: int) -> Interval:
        start = anchor + self.DUMMY_OFFSET + self.DUMMY_STRIDE * k
        return Interval(start, start + 1)

    def pad_with_dummies(self, parts: Dict[int, List[Interval]], target: int) -> Dict[int, List[Interval]]:
        """Append unit dummies past every existing endpoint until each vertex has target parts"""
        anchor = max((iv.r for ivs in parts.values() for iv in ivs), default=Fraction(0))
        k = 0
        padded = {}
        for v in sorted(parts):
            ivs = list(parts[v])
            while len(ivs) < target:
                ivs.append(self.dummy_interval(anchor, k))
                k += 1
            padded[v] = ivs
        return padded

    def normalize_to_disjoint(self, rep: DIntervalRep, preserve_count: bool = False) -> DIntervalRep:
        """
        Merge overlapping intervals of each vertex into their union

        Args:
            rep: Any d-interval representation
            preserve_count: Pad each vertex back to its original number of parts with dummies

        Returns:
            A representation, disjoint per vertex, with the same d-intersection graph
        """
        merged: Dict[int, List[Interval]] = {}
        for v, ivs in rep.items():
            out: List[Interval] = []
            for iv in sorted(ivs):
                if out and iv.l <= out[-1].r:
                    last = out.pop()
                    out.append(Interval(last.l, max(last.r, iv.r)))
                else:
                    out.append(iv)
            merged[v] = out

        if preserve_count:
            anchor = max((iv.r for ivs in merged.values() for iv in ivs), default=Fraction(0))
            k = 0
            for v, ivs in rep.items():
                while len(merged[v]) < len(ivs):
                    merged[v].append(self.dummy_interval(anchor, k))
                    k += 1
        return DIntervalRep(rep.d, merged)

    # =============================================================================
    # BALANCED SPLIT
    # =============================================================================

    def _overlapping_pair(self, v: int, ivs: Tuple[Interval, ...]) -> Optional[Tuple[Interval, Interval]]:
        pairs = [(a, b) for a, b in combinations(sorted(ivs), 2) if intersects(a, b)]
        if not pairs:
            return None
        if len(pairs) > 1:
            raise RepresentationError(f"Vertex {v} has {len(pairs)} overlapping pairs, at most one is supported")
        return pairs[0]

    def auto_epsilon(self, rep: DIntervalRep) -> Fraction:
        """A quarter of the smallest positive gap between endpoints and pair midpoints"""
        points = {x for _, iv in rep.underlying_family() for x in (iv.l, iv.r)}
        for _, ivs in rep.items():
            for a, b in combinations(sorted(ivs), 2):
                if intersects(a, b):
                    points.add((a.r + b.l) / 2)
        ordered = sorted(points)
        gaps = [y - x for x, y in zip(ordered, ordered[1:]) if y > x]
        return min(gaps, default=Fraction(1)) / 4

    def balanced_split(self, rep: DIntervalRep, epsilon: Optional[Fraction] = None) -> DIntervalRep:
        """
        Replace each overlapping pair [a,b],[c,d] by [a, mid-eps] and [mid+eps, d], mid = (b+c)/2

        Args:
            rep: A balanced representation, at most one overlapping pair per vertex; other parts are kept
            epsilon: Separation, or None to compute one

        Raises:
            RepresentationError: Input not balanced, or epsilon changes an intersection
        """
        for v, ivs in rep.items():
            if len({iv.length for iv in ivs}) > 1:
                raise RepresentationError(f"Representation is not balanced at vertex {v}")

        eps = self.auto_epsilon(rep) if epsilon is None else Fraction(epsilon)
        if eps <= 0:
            raise RepresentationError(f"epsilon must be positive, got {eps}")

        parts: Dict[int, List[Interval]] = {}
        for v, ivs in rep.items():
            pair = self._overlapping_pair(v, ivs)
            if pair is None:
                parts[v] = list(ivs)
                continue
            first, second = pair
            mid = (first.r + second.l) / 2
            if mid - eps < first.l or mid + eps > second.r:
                raise RepresentationError(f"epsilon {eps} too large to split vertex {v}")
            rest = list(ivs)
            rest.remove(first)
            rest.remove(second)
            parts[v] = sorted(rest + [Interval(first.l, mid - eps), Interval(mid + eps, second.r)])

        result = DIntervalRep(rep.d, parts)
        if self.d_intersection_graph(result) != self.d_intersection_graph(rep):
            raise RepresentationError(f"epsilon {eps} too large: the split changes an intersection")
        logger.info(f"Balanced split applied with epsilon={eps}")
        return result


# Global interval service instance
interval_service = IntervalService()
