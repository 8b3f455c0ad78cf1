"""
Split Search Service
Decides (disjoint / non-disjoint) unit 2-interval membership by searching for a
vertex split G' that is a unit interval graph

The search builds a proper order of G' left to right.  Each new representative
chooses where its block of earlier neighbours starts; that block is a suffix of
the order and its start never moves left, so representatives before it are
closed for good.  Closing is where coverage and canonicity are decided:

* a closed vertex with uncovered edges must receive a second representative;
* two closed siblings must not dominate one another (no isolated or redundant
  representative);
* in disjoint mode siblings are never adjacent and, per edge, the number of
  representative pairs is capped (1 inside an induced K_{1,4}, 2 inside an
  induced K_{1,3}, 3 otherwise).

Open representatives carry obligations.  The later neighbours of an open
representative y are pairwise adjacent and adjacent to everything after y in
the order, so when y is the last representative of its vertex the neighbours
it still misses must form a clique of G that is complete to the vertices after
y.  A vertex waiting for its second representative must have a remainder that
two cliques cover.  Vertex sets, projections and representative adjacency are
int bitmasks; failed states are remembered under a packed int key in a
two-generation memo of bounded size.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

import networkx as nx

from config import settings
from models import DIntervalRep, Graph, Interval
from schemas import RepresentativeEdges, SearchLimits, SplitMode, SplitResult, SplitSolution, VerifyReport
from services.graph_service import graph_service
from services.interval_service import interval_service
from services.recognition_service import proper_order
from services.unitizer_service import InfeasibleOrder, unitizer_service

logger = logging.getLogger(__name__)
refutation_logger = logging.getLogger("dinterval.refutation")

Rep = Tuple[int, int]

UNPLACED, ACTIVE, PENDING, FINAL = 0, 1, 2, 3


class _Exhausted(Exception):
    pass


def _rid(rep: Rep) -> int:
    """Bit index of a representative; (v, 1) and (v, 2) sit next to each other"""
    return 2 * rep[0] + rep[1] - 1


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class _State:
    __slots__ = ("seq", "start", "count", "closed", "status", "rep_adj", "proj", "pairs")

    def copy(self) -> "_State":
        other = _State()
        other.seq = list(self.seq)
        other.start = self.start
        other.count = list(self.count)
        other.closed = list(self.closed)
        other.status = list(self.status)
        other.rep_adj = dict(self.rep_adj)
        other.proj = dict(self.proj)
        other.pairs = dict(self.pairs)
        return other


class _SplitEngine:
    """One depth-first search with failure memo; not thread-safe, one per run"""

    def __init__(
        self,
        g: Graph,
        mode: SplitMode,
        limits: SearchLimits,
        splittable: Optional[Set[int]] = None,
        first: Optional[Sequence[int]] = None,
        deadline: Optional[float] = None,
    ):
        self.g = g
        self.mode = mode
        self.disjoint = mode == "disjoint"
        self.limits = limits
        self.first = set(first) if first is not None else None
        self.deadline = time.monotonic() + limits.wall_clock_budget if deadline is None else deadline
        self.nodes = 0
        self.failed: Set[int] = set()
        self.failed_older: Set[int] = set()
        self.trace = refutation_logger.isEnabledFor(logging.DEBUG)

        n = g.n
        self.graph = g.to_networkx()
        self.adj = {v: g.neighbors(v) for v in g.vertices}
        self.bit = [1 << v for v in range(n + 1)]
        self.adjmask = [0] + [sum(1 << w for w in g.neighbors(v)) for v in g.vertices]
        self.rep_bits = (2 * n + 1).bit_length()
        allowed = set(g.vertices) if splittable is None else splittable
        self.can_split = [False] + [v in allowed and g.degree(v) >= 2 for v in g.vertices]
        counts = graph_service.claw_center_counts(g)
        self.priority = sorted(g.vertices, key=lambda v: (-counts[v], v))
        self.cap = self._edge_caps() if self.disjoint else {}
        self._clique_cache: Dict[int, bool] = {}
        self._cover_cache: Dict[int, bool] = {}

    def _edge_caps(self) -> Dict[Tuple[int, int], int]:
        """Representative-pair caps for disjoint mode"""
        caps = {}
        for u, v in self.g.edges:
            cap = 3
            for center, leaf in ((u, v), (v, u)):
                others = sorted(self.adj[center] - self.adj[leaf] - {leaf})
                if graph_service._independent_subset(self.g, others, 3) is not None:
                    cap = 1
                    break
                if graph_service._independent_subset(self.g, others, 2) is not None:
                    cap = min(cap, 2)
            caps[(u, v)] = cap
        return caps

    # =============================================================================
    # CLIQUE TESTS
    # =============================================================================

    def _is_clique(self, mask: int) -> bool:
        known = self._clique_cache.get(mask)
        if known is None:
            known = all(not (mask & ~self.bit[a] & ~self.adjmask[a]) for a in _bits(mask))
            self._clique_cache[mask] = known
        return known

    def _two_cliques(self, mask: int) -> bool:
        """True iff the vertices of mask are covered by two cliques of G"""
        known = self._cover_cache.get(mask)
        if known is None:
            known = nx.is_bipartite(nx.complement(self.graph.subgraph(list(_bits(mask)))))
            self._cover_cache[mask] = known
        return known

    # =============================================================================
    # STATE TRANSITIONS
    # =============================================================================

    def _initial(self) -> _State:
        n = self.g.n
        state = _State()
        state.seq = []
        state.start = 0
        state.count = [0] * (n + 1)
        state.closed = [0] * (n + 1)
        state.status = [UNPLACED] * (n + 1)
        state.rep_adj = {}
        state.proj = {}
        state.pairs = {}
        return state

    def _settle(self, state: _State, u: int) -> Optional[str]:
        """Decide a vertex whose representatives are all closed; returns a prune reason"""
        projections = [state.proj[(u, i)] for i in range(1, state.count[u] + 1)]
        covered = 0
        for mask in projections:
            covered |= mask
        if state.count[u] == 2:
            first, second = projections
            if not first & ~second or not second & ~first:
                return "canonical"
            if covered != self.adjmask[u]:
                return "uncovered"
            state.status[u] = FINAL
        elif covered == self.adjmask[u]:
            state.status[u] = FINAL
        elif self.can_split[u]:
            if not self._two_cliques(self.adjmask[u] & ~covered):
                return "claw"
            state.status[u] = PENDING
        else:
            return "uncovered"
        return None

    def _obligations(self, state: _State) -> Optional[str]:
        """Check what open and pending vertices still need against what the order can still give"""
        final = available = 0
        for v in self.g.vertices:
            status = state.status[v]
            if status == FINAL:
                final |= self.bit[v]
            elif status == UNPLACED or (state.count[v] == 1 and self.can_split[v]):
                available |= self.bit[v]

        later = 0
        for pos in range(len(state.seq) - 1, state.start - 1, -1):
            u, index = state.seq[pos]
            if index == 2 or not self.can_split[u]:
                covered = state.proj[(u, 1)] | (state.proj[(u, 2)] if state.count[u] == 2 else 0)
                need = self.adjmask[u] & ~covered
                if need:
                    # a missing neighbour has no representative in the window, so it needs a new one
                    if need & ~available:
                        return "stranded"
                    if not self._is_clique(need):
                        return "claw"
                    for w in _bits(later):
                        if need & ~self.adjmask[w]:
                            return "claw"
            later |= self.bit[u]

        for v in self.g.vertices:
            if state.status[v] == PENDING and self.adjmask[v] & ~state.proj[(v, 1)] & final:
                return "stranded"
        return None

    def _place(self, state: _State, v: int, index: int, s: int) -> Tuple[Optional[_State], Optional[str]]:
        child = state.copy()
        k = len(child.seq)
        touched = []
        for pos in range(child.start, s):
            u = child.seq[pos][0]
            child.closed[u] += 1
            touched.append(u)

        x = (v, index)
        x_bit = 1 << _rid(x)
        child.count[v] += 1
        child.status[v] = ACTIVE
        neighbours = projected = 0
        for pos in range(s, k):
            y = child.seq[pos]
            u = y[0]
            if u != v:
                projected |= self.bit[u]
                child.proj[y] |= self.bit[v]
                if self.disjoint:
                    edge = (min(u, v), max(u, v))
                    used = child.pairs.get(edge, 0) + 1
                    if used > self.cap[edge]:
                        return None, "rep-cap"
                    child.pairs[edge] = used
            child.rep_adj[y] |= x_bit
            neighbours |= 1 << _rid(y)
        child.seq.append(x)
        child.rep_adj[x] = neighbours
        child.proj[x] = projected
        child.start = s

        for u in dict.fromkeys(touched):
            if child.closed[u] == child.count[u]:
                reason = self._settle(child, u)
                if reason:
                    return None, reason
        return child, self._obligations(child)

    def _finish(self, state: _State) -> Optional[_State]:
        child = state.copy()
        for pos in range(child.start, len(child.seq)):
            child.closed[child.seq[pos][0]] += 1
        child.start = len(child.seq)
        for v in self.g.vertices:
            if child.status[v] == ACTIVE and child.closed[v] == child.count[v]:
                if self._settle(child, v) or child.status[v] != FINAL:
                    return None
        return child

    # =============================================================================
    # SEARCH
    # =============================================================================

    def _key(self, state: _State) -> int:
        """Pack everything the rest of the search depends on into one int.

        Fields are fixed-width after a leading 1 and the statuses decide which
        representatives follow, so distinct states get distinct keys.
        """
        key, live = 1, 0
        for v in self.g.vertices:
            key = key << 3 | state.status[v] << 1 | (state.count[v] == 2)
            if state.status[v] in (ACTIVE, PENDING):
                live |= 3 << 2 * v
        window = state.seq[state.start:]
        key = key << self.rep_bits | len(window)
        for rep in window:
            key = key << self.rep_bits | _rid(rep)
        width = 2 * self.g.n + 2
        for v in self.g.vertices:
            if live >> 2 * v & 1:
                for i in range(1, state.count[v] + 1):
                    key = key << self.g.n + 1 | state.proj[(v, i)]
                    if self.disjoint:
                        key = key << width | (state.rep_adj[(v, i)] & live)
        return key

    def _remember(self, key: int) -> None:
        self.failed.add(key)
        if len(self.failed) >= self.limits.memo_limit:
            self.failed_older = self.failed
            self.failed = set()

    def _candidates(self, state: _State) -> List[Rep]:
        if not state.seq and self.first is not None:
            return [(v, 1) for v in self.priority if v in self.first]
        fresh = [(v, 1) for v in self.priority if state.status[v] == UNPLACED]
        second = [
            (v, 2)
            for v in self.priority
            if state.count[v] == 1 and self.can_split[v] and state.status[v] in (ACTIVE, PENDING)
        ]
        return fresh + second

    def _earliest_start(self, state: _State, v: int) -> int:
        """Smallest block start: every representative from it onward may neighbour v"""
        pos = len(state.seq)
        while pos > state.start:
            u = state.seq[pos - 1][0]
            if u == v:
                if self.disjoint:
                    break
            elif u not in self.adj[v]:
                break
            pos -= 1
        return pos

    def _tick(self) -> None:
        if self.nodes >= self.limits.node_budget:
            raise _Exhausted()
        self.nodes += 1
        if self.nodes % 256 == 0 and time.monotonic() > self.deadline:
            raise _Exhausted()

    def _dfs(self, state: _State, depth: int) -> Optional[_State]:
        self._tick()
        key = self._key(state)
        if key in self.failed or key in self.failed_older:
            if self.trace:
                refutation_logger.debug(f"depth={depth} decision=revisit prune=memo")
            return None

        if all(state.status[v] in (ACTIVE, FINAL) for v in self.g.vertices):
            done = self._finish(state)
            if done is not None:
                return done

        k = len(state.seq)
        for v, index in self._candidates(state):
            for s in range(self._earliest_start(state, v), k + 1):
                child, reason = self._place(state, v, index, s)
                if reason:
                    if self.trace:
                        refutation_logger.debug(f"depth={depth} decision={v}_{index}@{s} prune={reason}")
                    continue
                found = self._dfs(child, depth + 1)
                if found is not None:
                    return found

        self._remember(key)
        return None

    def run(self) -> Optional[_State]:
        if self.g.n == 0:
            return self._initial()
        for v in self.g.vertices:
            if not self.can_split[v] and self.adjmask[v] and not self._two_cliques(self.adjmask[v]):
                refutation_logger.debug(f"depth=0 decision=none prune=claw vertex={v}")
                return None
        return self._dfs(self._initial(), 0)

    def solution(self, state: _State) -> SplitSolution:
        split = {v: state.count[v] == 2 for v in self.g.vertices}
        rep_edges = []
        for u, v in self.g.edges:
            pairs = sorted(
                (i, j)
                for i in range(1, state.count[u] + 1)
                for j in range(1, state.count[v] + 1)
                if state.rep_adj[(u, i)] >> _rid((v, j)) & 1
            )
            rep_edges.append(RepresentativeEdges(u=u, v=v, pairs=pairs))
        internal = sorted(
            v for v in self.g.vertices if state.count[v] == 2 and state.rep_adj[(v, 1)] >> _rid((v, 2)) & 1
        )
        return SplitSolution(split=split, rep_edges=rep_edges, internal_edges=internal, order=list(state.seq))


def _search_branch(n: int, edges: List[Tuple[int, int]], mode: SplitMode, limits: dict,
                   splittable: Optional[List[int]], first: List[int],
                   time_left: float) -> Tuple[str, Optional[dict], int]:
    """Process-pool entry point: one slice of first representatives"""
    g = Graph(n, edges)
    engine = _SplitEngine(
        g, mode, SearchLimits(**limits), set(splittable) if splittable is not None else None, first,
        deadline=time.monotonic() + time_left,
    )
    try:
        found = engine.run()
    except _Exhausted:
        return "exhausted", None, engine.nodes
    if found is None:
        return "no", None, engine.nodes
    return "yes", engine.solution(found).model_dump(), engine.nodes


class SplitSearchService:
    """Unit 2-interval membership via vertex splits"""

    # =============================================================================
    # SEARCH
    # =============================================================================

    def search_split(
        self,
        g: Graph,
        mode: SplitMode,
        limits: Optional[SearchLimits] = None,
        threads: Optional[int] = None,
    ) -> SplitResult:
        """
        Search for a split G' of g that is a unit interval graph

        The first pass only lets centres of induced claws split (they must);
        the unrestricted pass runs only when the first one is refuted.  Both
        passes share one node budget and one deadline.

        Args:
            g: The graph
            mode: "disjoint" (siblings non-adjacent) or "nondisjoint"
            limits: Node, wall clock and memo budgets (defaults from settings)
            threads: Worker processes for the first-representative branches

        Returns:
            SplitResult with verdict yes / no / exhausted
        """
        limits = limits or SearchLimits(
            node_budget=settings.node_budget,
            wall_clock_budget=settings.time_budget_seconds,
            memo_limit=settings.memo_limit,
        )
        threads = settings.threads if threads is None else threads
        started = time.monotonic()
        deadline = started + limits.wall_clock_budget
        centers = {v for v in g.vertices if graph_service.has_induced_star_at(g, v, 3)}
        refutation_logger.info(f"split search: {g}, mode={mode}, claw centres={sorted(centers)}")

        nodes = 0
        verdict, solution = "no", None
        for splittable in (centers, None):
            remaining = limits.node_budget - nodes
            if remaining <= 0 or time.monotonic() >= deadline:
                verdict = "exhausted"
                break
            budget = limits.model_copy(update={"node_budget": remaining})
            if threads > 1 and g.n > 1:
                verdict, solution, used = self._run_parallel(g, mode, budget, splittable, threads, deadline)
            else:
                verdict, solution, used = self._run_serial(g, mode, budget, splittable, deadline)
            nodes += used
            if verdict != "no" or splittable is None or centers == set(v for v in g.vertices if g.degree(v) >= 2):
                break

        if solution is not None:
            report = self.verify_split(g, solution, mode)
            if not report.ok:
                raise InfeasibleOrder(f"search produced an invalid split: {report.kinds()}")

        elapsed = time.monotonic() - started
        refutation_logger.info(f"split search verdict={verdict} nodes={nodes} elapsed={elapsed:.2f}s")
        return SplitResult(verdict=verdict, mode=mode, solution=solution, nodes=nodes, elapsed_seconds=elapsed)

    def _run_serial(self, g: Graph, mode: SplitMode, limits: SearchLimits,
                    splittable: Optional[Set[int]], deadline: float) -> Tuple[str, Optional[SplitSolution], int]:
        engine = _SplitEngine(g, mode, limits, splittable, deadline=deadline)
        try:
            found = engine.run()
        except _Exhausted:
            return "exhausted", None, engine.nodes
        if found is None:
            return "no", None, engine.nodes
        return "yes", engine.solution(found), engine.nodes

    def _run_parallel(self, g: Graph, mode: SplitMode, limits: SearchLimits, splittable: Optional[Set[int]],
                      threads: int, deadline: float) -> Tuple[str, Optional[SplitSolution], int]:
        """Each worker gets an equal share of the remaining nodes and the time left until deadline"""
        workers = max(1, min(threads, limits.node_budget))
        slices = [chunk for chunk in (list(g.vertices)[i::workers] for i in range(workers)) if chunk]
        allowed = sorted(splittable) if splittable is not None else None
        share = limits.model_copy(update={"node_budget": max(1, limits.node_budget // len(slices))})
        time_left = max(0.0, deadline - time.monotonic())
        verdicts, nodes, solution = [], 0, None
        with ProcessPoolExecutor(max_workers=len(slices)) as pool:
            futures = [
                pool.submit(_search_branch, g.n, g.edges, mode, share.model_dump(), allowed, chunk, time_left)
                for chunk in slices
            ]
            for future in futures:
                verdict, payload, used = future.result()
                verdicts.append(verdict)
                nodes += used
                if verdict == "yes" and solution is None:
                    solution = SplitSolution.model_validate(payload)
        if solution is not None:
            return "yes", solution, nodes
        return ("exhausted" if "exhausted" in verdicts else "no"), None, nodes

    # =============================================================================
    # CERTIFICATES
    # =============================================================================

    def split_graph(self, g: Graph, s: SplitSolution) -> nx.Graph:
        """G' on representatives (v, i); edges from rep_edges and internal_edges"""
        graph = nx.Graph()
        for v in g.vertices:
            graph.add_node((v, 1))
            if s.split.get(v, False):
                graph.add_node((v, 2))
        for entry in s.rep_edges:
            for i, j in entry.pairs:
                graph.add_edge((entry.u, i), (entry.v, j))
        for v in s.internal_edges:
            graph.add_edge((v, 1), (v, 2))
        return graph

    def verify_split(self, g: Graph, s: SplitSolution, mode: SplitMode) -> VerifyReport:
        """Independently rebuild G' and check every certificate condition"""
        report = VerifyReport()

        def valid_index(v: int, i: int) -> bool:
            return v in g.vertices and (i == 1 or (i == 2 and s.split.get(v, False)))

        listed = set()
        for entry in s.rep_edges:
            u, v = min(entry.u, entry.v), max(entry.u, entry.v)
            listed.add((u, v))
            if not g.has_edge(u, v):
                report.add("unknown-edge", edge=[entry.u, entry.v])
            if not entry.pairs:
                report.add("missing-representative", edge=[u, v])
            for i, j in entry.pairs:
                if not (valid_index(entry.u, i) and valid_index(entry.v, j)):
                    report.add("bad-representative", edge=[entry.u, entry.v], pair=[i, j])
        for u, v in g.edges:
            if (u, v) not in listed:
                report.add("missing-representative", edge=[u, v])
        for v in s.internal_edges:
            if not s.split.get(v, False):
                report.add("bad-representative", vertex=v, internal=True)
            elif mode == "disjoint":
                report.add("sibling-adjacent", vertex=v)

        if report.ok:
            prime = self.split_graph(g, s)
            if proper_order({x: prime[x] for x in prime}, sorted(prime)) is None:
                report.add("not-unit-interval", representatives=prime.number_of_nodes())
        return report

    def solution_to_representation(self, g: Graph, s: SplitSolution, mode: SplitMode) -> DIntervalRep:
        """Unit 2-interval representation whose intervals are the unit intervals of G'"""
        prime = self.split_graph(g, s)
        left = unitizer_service.left_endpoints(prime)
        parts: Dict[int, List[Interval]] = {}
        for v in g.vertices:
            parts[v] = [Interval(left[(v, i)], left[(v, i)] + 1) for i in (1, 2) if (v, i) in left]
        rep = DIntervalRep(2, parts)
        report = interval_service.verify_representation(rep, g, require_unit=True, require_disjoint=mode == "disjoint")
        if not report.ok:
            raise InfeasibleOrder(f"split certificate does not yield a representation: {report.kinds()}")
        return rep

    # =============================================================================
    # ORACLE
    # =============================================================================

    def brute_force_oracle(self, g: Graph, mode: SplitMode) -> bool:
        """
        Exhaustive enumeration of splits, internal edges and representative pairs

        Vertices are added in decreasing degree.  Each vertex picks a shape
        (unsplit, split, split with an internal edge) and then a non-empty set
        of representative pairs towards every earlier neighbour.  A branch dies
        on a claw whose adjacencies are all decided, and once a vertex is
        complete the representatives placed so far must induce a unit interval
        graph.  Only vertices of degree at least 2 split, and a split vertex
        whose neighbours are all placed must not have nested projections:
        dropping the dominated representative of a solution leaves an induced
        subgraph, which is again a solution.
        """
        order = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
        position = {v: i for i, v in enumerate(order)}
        adj: Dict[Rep, Set[Rep]] = {}
        placed: List[int] = []

        def reps(v: int) -> List[Rep]:
            return [r for r in ((v, 1), (v, 2)) if r in adj]

        def link(x: Rep, y: Rep) -> None:
            adj[x].add(y)
            adj[y].add(x)

        def unlink(x: Rep, y: Rep) -> None:
            adj[x].discard(y)
            adj[y].discard(x)

        def apart(a: Rep, b: Rep, current: int, done: Set[int]) -> bool:
            """a and b are non-adjacent for good"""
            if b in adj[a]:
                return False
            u, w = a[0], b[0]
            if u == w or not g.has_edge(u, w):
                return True
            if current == u:
                return w in done
            if current == w:
                return u in done
            return True

        def claw_at(center: Rep, current: int, done: Set[int]) -> bool:
            return any(
                apart(a, b, current, done) and apart(a, c, current, done) and apart(b, c, current, done)
                for a, b, c in combinations(sorted(adj[center]), 3)
            )

        def nested(u: int) -> bool:
            first, second = ({x[0] for x in adj[(u, i)]} - {u} for i in (1, 2))
            return first <= second or second <= first

        def complete(v: int) -> bool:
            members = [r for u in placed for r in reps(u)]
            if proper_order({r: adj[r] for r in members}, members) is None:
                return False
            for u in placed:
                if (u, 2) in adj and (u == v or g.has_edge(u, v)):
                    if all(position[w] <= position[v] for w in g.neighbors(u)) and nested(u):
                        return False
            return True

        def assign(v: int, todo: List[int], done: Set[int]) -> bool:
            if not todo:
                placed.append(v)
                if complete(v) and place(len(placed)):
                    return True
                placed.pop()
                return False
            w, rest = todo[0], todo[1:]
            options = [(x, y) for x in reps(v) for y in reps(w)]
            # until v meets its first neighbour its two representatives are interchangeable
            symmetric = len(reps(v)) == 2 and not done
            for size in range(1, len(options) + 1):
                for chosen in combinations(options, size):
                    if symmetric and tuple(sorted(((x[0], 3 - x[1]), y) for x, y in chosen)) < chosen:
                        continue
                    for x, y in chosen:
                        link(x, y)
                    now = done | {w}
                    if not any(claw_at(c, v, now) for c in reps(v) + reps(w)) and assign(v, rest, now):
                        return True
                    for x, y in chosen:
                        unlink(x, y)
            return False

        def place(i: int) -> bool:
            if i == len(order):
                return True
            v = order[i]
            earlier = [w for w in order[:i] if g.has_edge(v, w)]
            shapes = [(False, False)]
            if g.degree(v) >= 2:
                shapes.append((True, False))
                if mode == "nondisjoint":
                    shapes.append((True, True))
            for split, internal in shapes:
                adj[(v, 1)] = set()
                if split:
                    adj[(v, 2)] = set()
                    if internal:
                        link((v, 1), (v, 2))
                if assign(v, earlier, set()):
                    return True
                for r in reps(v):
                    for other in list(adj[r]):
                        adj[other].discard(r)
                    del adj[r]
            return False

        return place(0)


# Global split search service instance
split_search_service = SplitSearchService()
