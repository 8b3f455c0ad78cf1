"""
Construction Service
Unit d-interval representations of interval graphs without induced K_{1,2d+1}

Every interval I meeting m pairwise disjoint intervals is replaced by
t = ceil(m/2) pieces inside I, each meeting at most two pairwise disjoint
intervals of the resulting family; the family is then unitized.
"""

import logging
import math
from bisect import bisect_left, bisect_right
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Dict, List, Literal, Optional, Sequence, Tuple, Union

from config import settings
from models import DIntervalRep, Graph, Interval, LabeledFamily, TransformPlan
from schemas import ContainmentReport
from services.graph_service import graph_service
from services.interval_service import interval_service
from services.recognition_service import recognition_service
from services.unitizer_service import InfeasibleOrder, unitizer_service

logger = logging.getLogger(__name__)

TieBreak = Literal["smallest", "largest"]


class NotInterval(ValueError):
    """Raised when the input graph is not an interval graph"""
    pass


class ClawBoundExceeded(ValueError):
    """Raised when a vertex meets more than 2d pairwise disjoint intervals"""

    def __init__(self, vertex: int, m: int, d: int, witness: List[int]):
        self.vertex = vertex
        self.m = m
        self.d = d
        self.witness = witness
        super().__init__(
            f"vertex {vertex} meets {m} pairwise disjoint intervals {witness}, more than 2d = {2 * d}"
        )


class NotEClawFree(ValueError):
    """Raised when the disjoint construction is asked for a graph containing an E-claw"""

    def __init__(self, witness: List[int]):
        self.witness = witness
        super().__init__(f"graph contains the E-claw {witness}")


class _FamilyIndex:
    """Sorted views of a one-interval representation on a common integer grid.

    All queries of the per-vertex transform are binary searches into these
    arrays, so planning every vertex costs O(n log n) overall for bounded m.
    """

    def __init__(self, rep: DIntervalRep, tie_break: TieBreak = "smallest"):
        ids = rep.vertices
        intervals = [rep.interval(v) for v in ids]
        scale = 1
        for iv in intervals:
            scale = math.lcm(scale, iv.l.denominator, iv.r.denominator)
        self.scale = scale
        self.L = {v: iv.l.numerator * (scale // iv.l.denominator) for v, iv in zip(ids, intervals)}
        self.R = {v: iv.r.numerator * (scale // iv.r.denominator) for v, iv in zip(ids, intervals)}
        sign = 1 if tie_break == "smallest" else -1
        L, R = self.L, self.R

        self.by_l = sorted(ids, key=lambda v: (L[v], sign * v))
        self.by_l_l = [L[v] for v in self.by_l]
        self.by_r = sorted(ids, key=lambda v: (R[v], sign * v))
        self.by_r_r = [R[v] for v in self.by_r]

        n = len(ids)
        finish = [(R[v], sign * v) for v in self.by_l]
        start = [(L[v], -sign * v) for v in self.by_r]

        # earliest (R, tie) over by_l[i:]
        self.suffix_min = [0] * n
        best = n - 1
        for i in range(n - 1, -1, -1):
            if finish[i] <= finish[best]:
                best = i
            self.suffix_min[i] = best
        # latest (L, -tie) over by_r[:i+1]
        self.prefix_max_l = [0] * n
        best = 0
        for i in range(n):
            if start[i] > start[best]:
                best = i
            self.prefix_max_l[i] = best
        # largest R over by_l[:i+1]
        self.prefix_max_r = [0] * n
        best = 0
        for i in range(n):
            if finish[i][0] > finish[best][0]:
                best = i
            self.prefix_max_r[i] = best

    def to_fraction(self, value: int) -> Fraction:
        return Fraction(value) if self.scale == 1 else Fraction(value, self.scale)

    def interval(self, lo: int, hi: int) -> Interval:
        return Interval(self.to_fraction(lo), self.to_fraction(hi))

    def latest_start_up_to(self, x: int) -> Optional[int]:
        """Latest-starting interval with l <= x (first of its tie group)"""
        q = bisect_right(self.by_l_l, x)
        if q == 0:
            return None
        j = bisect_left(self.by_l_l, self.by_l_l[q - 1])
        return self.by_l[j]

    def forward(self, v: int) -> List[Optional[int]]:
        """Earliest-finishing greedy over N(v); the last pick may be unnamed (None)"""
        a, b = self.L[v], self.R[v]
        n = len(self.by_r)
        i = bisect_left(self.by_r_r, a)
        while i < n and self.by_r[i] == v:
            i += 1
        if i == n or self.by_r_r[i] > b:
            # every neighbour contains b
            q = bisect_right(self.by_l_l, b)
            if q and self.R[self.by_l[self.prefix_max_r[q - 1]]] > b:
                return [self.by_l[self.prefix_max_r[q - 1]]]
            return []

        picks: List[Optional[int]] = [self.by_r[i]]
        q = bisect_right(self.by_l_l, b)
        x = self.R[picks[0]]
        while True:
            p = bisect_right(self.by_l_l, x)
            if p >= q:
                break
            c = self.by_l[self.suffix_min[p]]
            if self.L[c] > b:
                picks.append(None)
                break
            picks.append(c)
            if self.R[c] > b:
                break
            x = self.R[c]
        return picks

    def backward_pair(self, v: int) -> Tuple[int, Optional[int]]:
        """(latest-starting neighbour, latest-starting neighbour ending before it); needs m >= 2"""
        last = self.latest_start_up_to(self.R[v])
        e = bisect_left(self.by_r_r, self.L[last])
        before = self.by_r[self.prefix_max_l[e - 1]] if e else None
        return last, before


class ConstructionService:
    """Transform, unitize and pad"""

    # =============================================================================
    # PER-VERTEX TRANSFORM
    # =============================================================================

    def _plan(self, index: _FamilyIndex, v: int, disjoint: bool = False) -> Tuple[TransformPlan, List[Tuple[int, int]]]:
        a, b = index.L[v], index.R[v]
        forward = index.forward(v)
        m = len(forward)
        plan = TransformPlan(vertex=v, m=m)

        if m <= 2:
            if m == 2:
                last, _ = index.backward_pair(v)
                plan.a_family = [forward[0], last]
            else:
                plan.a_family = list(forward)
            return plan, [(a, b)]

        last, before = index.backward_pair(v)
        named = forward[:m - 1]
        plan.a_family = named + [last]
        plan.b_family = [index.latest_start_up_to(index.R[x]) for x in named]
        R, L = index.R, index.L

        def A(k: int) -> int:
            return named[k - 1]

        def B(k: int) -> int:
            return plan.b_family[k - 1]

        t = (m + 1) // 2
        if m == 3:
            if disjoint:
                if L[A(1)] >= a:
                    return plan, [(L[A(1)], R[A(1)]), (L[before], b)]
                if R[last] <= b:
                    return plan, [(a, R[A(2)]), (L[last], R[last])]
                raise NotEClawFree([v] + plan.a_family)
            return plan, [(a, R[A(2)]), (L[before], b)]

        pieces = [(a, R[A(2)])]
        middle_end = t - 1 if m % 2 == 0 else t - 2
        for i in range(2, middle_end + 1):
            pieces.append((L[B(2 * i - 1)], R[A(2 * i)]))
        if m % 2 == 1:
            pieces.append((L[A(2 * t - 3)], R[A(2 * t - 3)]))
        pieces.append((L[before], b))
        return plan, pieces

    def transform_interval(self, v: int, rep: DIntervalRep, tie_break: TieBreak = "smallest") -> TransformPlan:
        """
        Plan the pieces replacing the interval of v

        Args:
            v: Vertex id
            rep: One-interval representation
            tie_break: Which vertex id wins equal endpoints

        Returns:
            TransformPlan with m, the A and B families and the pieces
        """
        rep.interval(v)
        index = _FamilyIndex(rep, tie_break)
        plan, pieces = self._plan(index, v)
        plan.pieces = [index.interval(lo, hi) for lo, hi in pieces]
        return plan

    def plan_all(
        self,
        rep: DIntervalRep,
        tie_break: TieBreak = "smallest",
        threads: int = 1,
        disjoint: bool = False,
    ) -> List[TransformPlan]:
        """Plans for every vertex in id order; the per-vertex phase may run on a thread pool"""
        index = _FamilyIndex(rep, tie_break)

        def run(chunk: Sequence[int]) -> List[TransformPlan]:
            plans = []
            for v in chunk:
                plan, pieces = self._plan(index, v, disjoint)
                plan.pieces = [index.interval(lo, hi) for lo, hi in pieces]
                plans.append(plan)
            return plans

        vertices = sorted(rep.vertices)
        if threads <= 1 or len(vertices) < 2 * threads:
            return run(vertices)
        size = -(-len(vertices) // threads)
        chunks = [vertices[i:i + size] for i in range(0, len(vertices), size)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run, chunks))
        return [plan for chunk in results for plan in chunk]

    def required_d(self, rep: DIntervalRep) -> int:
        plans = self.plan_all(rep)
        return max(1, max((-(-p.m // 2) for p in plans), default=1))

    def check_claw_bound(self, plans: Sequence[TransformPlan], d: int) -> None:
        worst = max(plans, key=lambda p: (p.m, -p.vertex), default=None)
        if worst is not None and worst.m > 2 * d:
            raise ClawBoundExceeded(worst.vertex, worst.m, d, list(worst.a_family))

    def build_underlying_family(self, plans: Sequence[TransformPlan]) -> LabeledFamily:
        return [((p.vertex, j), piece) for p in plans for j, piece in enumerate(p.pieces, start=1)]

    # =============================================================================
    # PIPELINES
    # =============================================================================

    def _as_representation(self, source: Union[Graph, DIntervalRep]) -> Tuple[DIntervalRep, Graph]:
        if isinstance(source, Graph):
            rep = recognition_service.recognize_interval(source)
            if rep is None:
                raise NotInterval(f"{source} is not an interval graph")
            return rep, source
        if not source.is_single():
            raise ValueError("Construction input must have exactly one interval per vertex")
        return source, interval_service.d_intersection_graph(source)

    def _assemble(
        self,
        plans: Sequence[TransformPlan],
        graph: Graph,
        d: int,
        pad: bool,
        disjoint: bool,
    ) -> DIntervalRep:
        family = self.build_underlying_family(plans)
        unit = unitizer_service.unitize(family)
        parts: Dict[int, List[Interval]] = {}
        for (v, _), iv in unit:
            parts.setdefault(v, []).append(iv)
        if pad:
            parts = interval_service.pad_with_dummies(parts, d)
        result = DIntervalRep(d, parts)

        report = interval_service.verify_representation(result, graph, require_unit=True, require_disjoint=disjoint)
        if not report.ok:
            raise InfeasibleOrder(f"constructed representation failed verification: {report.kinds()}")
        return result

    def build_unit_d_rep(
        self,
        source: Union[Graph, DIntervalRep],
        d: int,
        pad: Optional[bool] = None,
        tie_break: TieBreak = "smallest",
        threads: int = 1,
    ) -> DIntervalRep:
        """
        Unit d-interval representation of an interval graph without induced K_{1,2d+1}

        Args:
            source: The graph, or a one-interval representation of it
            d: Number of intervals per vertex
            pad: Pad every vertex with dummies to exactly d parts (default from settings)

        Raises:
            NotInterval: The graph is not an interval graph
            ClawBoundExceeded: Some vertex has m > 2d
        """
        if d < 1:
            raise ValueError(f"d must be positive, got {d}")
        pad = settings.pad_dummies if pad is None else pad
        rep, graph = self._as_representation(source)
        plans = self.plan_all(rep, tie_break, threads)
        self.check_claw_bound(plans, d)
        logger.info(f"Constructing unit {d}-interval representation for {len(plans)} vertices")
        return self._assemble(plans, graph, d, pad, disjoint=False)

    # =============================================================================
    # DISJOINT VARIANT
    # =============================================================================

    def _side_is_contained(self, index: _FamilyIndex, v: int) -> bool:
        a, b = index.L[v], index.R[v]
        forward = index.forward(v)
        last, _ = index.backward_pair(v)
        return index.L[forward[0]] >= a or index.R[last] <= b

    def _meets_only_inside(self, rep: DIntervalRep, side: int, center: int) -> bool:
        """Every interval meeting the side interval also meets the centre"""
        side_iv, center_iv = rep.interval(side), rep.interval(center)
        return all(
            u == center or center_iv.intersects(iv)
            for u, (iv,) in rep.items()
            if u != side and side_iv.intersects(iv)
        )

    def stretch_for_disjoint(self, rep: DIntervalRep, v: int) -> DIntervalRep:
        """
        Shrink the outer part of A_1 (or A_4) of an m = 3 vertex into its interval

        Helly's property keeps every intersection of the shrunk interval, so the
        intersection graph is unchanged and all endpoints stay input endpoints.
        """
        index = _FamilyIndex(rep)
        forward = index.forward(v)
        if len(forward) != 3 or self._side_is_contained(index, v):
            return rep
        center = rep.interval(v)
        first, (last, _) = forward[0], index.backward_pair(v)
        parts = {u: ivs for u, ivs in rep.items()}

        if self._meets_only_inside(rep, first, v):
            old = rep.interval(first)
            parts[first] = (Interval(max(old.l, center.l), old.r),)
            logger.debug(f"Stretch at {v}: {first} {old} -> {parts[first][0]}")
        elif self._meets_only_inside(rep, last, v):
            old = rep.interval(last)
            parts[last] = (Interval(old.l, min(old.r, center.r)),)
            logger.debug(f"Stretch at {v}: {last} {old} -> {parts[last][0]}")
        else:
            raise NotEClawFree([v, first, last])
        return DIntervalRep(1, parts)

    def build_disjoint_unit_d_rep_eclaw_free(
        self,
        source: Union[Graph, DIntervalRep],
        d: int,
        pad: Optional[bool] = None,
        tie_break: TieBreak = "smallest",
        threads: int = 1,
    ) -> DIntervalRep:
        """
        Unit d-interval representation with pairwise disjoint parts per vertex

        Raises:
            NotEClawFree: The graph contains an E-claw
            ClawBoundExceeded: Some vertex has m > 2d
        """
        if d < 1:
            raise ValueError(f"d must be positive, got {d}")
        pad = settings.pad_dummies if pad is None else pad
        rep, graph = self._as_representation(source)

        free, witness = graph_service.is_e_claw_free(graph)
        if not free:
            raise NotEClawFree(witness)

        plans = self.plan_all(rep, tie_break)
        self.check_claw_bound(plans, d)

        changed = True
        while changed:
            changed = False
            index = _FamilyIndex(rep, tie_break)
            for v in sorted(rep.vertices):
                if len(index.forward(v)) == 3 and not self._side_is_contained(index, v):
                    rep = self.stretch_for_disjoint(rep, v)
                    changed = True
                    break

        if interval_service.d_intersection_graph(rep) != graph:
            raise InfeasibleOrder("stretching changed the intersection graph")
        plans = self.plan_all(rep, tie_break, threads, disjoint=True)
        logger.info(f"Constructing disjoint unit {d}-interval representation for {len(plans)} vertices")
        return self._assemble(plans, graph, d, pad, disjoint=True)

    # =============================================================================
    # MEASUREMENTS
    # =============================================================================

    def measure_original_containment(self, rep: DIntervalRep) -> ContainmentReport:
        """Count pieces containing an input interval that is left untransformed (m <= 2)"""
        plans = self.plan_all(rep)
        originals = [rep.interval(p.vertex) for p in plans if p.is_original]
        report = ContainmentReport()
        for plan in plans:
            if plan.is_original:
                continue
            report.transformed_vertices += 1
            for j, piece in enumerate(plan.pieces, start=1):
                report.pieces += 1
                if any(piece.contains(iv) for iv in originals):
                    report.pieces_with_original += 1
                elif report.first_missing is None:
                    report.first_missing = {"vertex": plan.vertex, "piece": j, "interval": str(piece)}
        return report


# Global construction service instance
construction_service = ConstructionService()
