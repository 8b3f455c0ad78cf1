from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, Hashable, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

import networkx as nx

Rational = Fraction
Label = Hashable
RationalLike = Union[int, str, Fraction]


class GraphError(ValueError):
    """Raised when a graph violates the simple-graph invariants"""
    pass


class RepresentationError(ValueError):
    """Raised when a d-interval representation is malformed or an operation on it is not applicable"""
    pass


def as_rational(value: RationalLike) -> Fraction:
    """Coerce an int, a "p/q" string or a Fraction into a Fraction (floats are rejected)"""
    if isinstance(value, float):
        raise RepresentationError(f"Floating coordinates are not exact: {value!r}")
    return Fraction(value)


# =============================================================================
# GRAPHS
# =============================================================================

class Graph:
    """Simple undirected graph on vertices 1..n.

    Immutable after construction; adjacency is derived once and shared.
    """

    __slots__ = ("_n", "_edges", "_adj")

    def __init__(self, n: int, edges: Iterable[Tuple[int, int]] = ()):
        if n < 0:
            raise GraphError(f"Vertex count must be non-negative, got {n}")
        self._n = n
        normalized = set()
        adj: Dict[int, set] = {v: set() for v in range(1, n + 1)}
        for u, v in edges:
            if u == v:
                raise GraphError(f"Self-loop at vertex {u}")
            for x in (u, v):
                if not 1 <= x <= n:
                    raise GraphError(f"Vertex {x} out of range 1..{n}")
            key = (min(u, v), max(u, v))
            if key in normalized:
                raise GraphError(f"Duplicate edge {key[0]}-{key[1]}")
            normalized.add(key)
            adj[u].add(v)
            adj[v].add(u)
        self._edges: FrozenSet[Tuple[int, int]] = frozenset(normalized)
        self._adj: Dict[int, FrozenSet[int]] = {v: frozenset(nbrs) for v, nbrs in adj.items()}

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Graph":
        """Relabel a networkx graph onto 1..n following the sorted node order"""
        nodes = sorted(graph.nodes())
        index = {node: i + 1 for i, node in enumerate(nodes)}
        return cls(len(nodes), [(index[u], index[v]) for u, v in graph.edges()])

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self._edges)
        return graph

    @property
    def n(self) -> int:
        return self._n

    @property
    def vertices(self) -> range:
        return range(1, self._n + 1)

    @property
    def edges(self) -> List[Tuple[int, int]]:
        """Edges as (u, v) with u < v, sorted lexicographically"""
        return sorted(self._edges)

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def neighbors(self, v: int) -> FrozenSet[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj.get(u, ())

    def adjacency(self) -> Dict[int, FrozenSet[int]]:
        return dict(self._adj)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={len(self._edges)})"


@dataclass(frozen=True)
class StarWitness:
    """Induced K_{1,t}: center adjacent to every leaf, leaves pairwise non-adjacent"""
    center: int
    leaves: Tuple[int, ...]

    @property
    def t(self) -> int:
        return len(self.leaves)

    def __str__(self) -> str:
        return f"[{self.center}; {','.join(str(x) for x in self.leaves)}]"


@dataclass(frozen=True)
class ProperOrder:
    """Vertex order in which every closed neighbourhood is a consecutive block"""
    order: Tuple[Label, ...]

    def positions(self) -> Dict[Label, int]:
        return {v: i for i, v in enumerate(self.order)}


# =============================================================================
# INTERVALS
# =============================================================================

@dataclass(frozen=True, order=True)
class Interval:
    """Closed interval [l, r] with exact rational endpoints (points allowed)"""
    l: Fraction
    r: Fraction

    def __post_init__(self):
        object.__setattr__(self, "l", as_rational(self.l))
        object.__setattr__(self, "r", as_rational(self.r))
        if self.l > self.r:
            raise RepresentationError(f"Interval left endpoint {self.l} exceeds right endpoint {self.r}")

    @property
    def length(self) -> Fraction:
        return self.r - self.l

    def intersects(self, other: "Interval") -> bool:
        return max(self.l, other.l) <= min(self.r, other.r)

    def contains(self, other: "Interval") -> bool:
        return self.l <= other.l and other.r <= self.r

    def __str__(self) -> str:
        return f"[{self.l},{self.r}]"


LabeledFamily = List[Tuple[Label, Interval]]


class DIntervalRep:
    """Per-vertex lists of at most d closed intervals.

    The underlying family is the multiset union of all the lists; its items are
    labelled (vertex, part index) with part indices starting at 1.
    """

    __slots__ = ("_d", "_parts")

    def __init__(self, d: int, parts: Mapping[int, Sequence[Interval]]):
        if d < 1:
            raise RepresentationError(f"d must be positive, got {d}")
        cleaned: Dict[int, Tuple[Interval, ...]] = {}
        for v in sorted(parts):
            intervals = tuple(parts[v])
            if not 1 <= len(intervals) <= d:
                raise RepresentationError(
                    f"Vertex {v} has {len(intervals)} intervals, expected between 1 and {d}"
                )
            cleaned[v] = intervals
        self._d = d
        self._parts = cleaned

    @classmethod
    def single(cls, intervals: Mapping[int, Interval]) -> "DIntervalRep":
        return cls(1, {v: (iv,) for v, iv in intervals.items()})

    @property
    def d(self) -> int:
        return self._d

    @property
    def vertices(self) -> List[int]:
        return list(self._parts)

    def parts(self, v: int) -> Tuple[Interval, ...]:
        try:
            return self._parts[v]
        except KeyError:
            raise RepresentationError(f"Unknown vertex {v}") from None

    def interval(self, v: int) -> Interval:
        """The only interval of v (one-interval representations)"""
        parts = self.parts(v)
        if len(parts) != 1:
            raise RepresentationError(f"Vertex {v} has {len(parts)} intervals, expected exactly one")
        return parts[0]

    def items(self) -> Iterator[Tuple[int, Tuple[Interval, ...]]]:
        return iter(self._parts.items())

    def underlying_family(self) -> LabeledFamily:
        return [((v, j), iv) for v, ivs in self._parts.items() for j, iv in enumerate(ivs, start=1)]

    def is_single(self) -> bool:
        return all(len(ivs) == 1 for ivs in self._parts.values())

    def max_right(self) -> Optional[Fraction]:
        return max((iv.r for ivs in self._parts.values() for iv in ivs), default=None)

    def __len__(self) -> int:
        return len(self._parts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DIntervalRep):
            return NotImplemented
        return self._d == other._d and self._parts == other._parts

    def __repr__(self) -> str:
        return f"DIntervalRep(d={self._d}, vertices={len(self._parts)})"


# =============================================================================
# CONSTRUCTION PLANS
# =============================================================================

@dataclass
class TransformPlan:
    """Per-vertex outcome of the piece construction"""
    vertex: int
    m: int
    a_family: List[int] = field(default_factory=list)
    b_family: List[int] = field(default_factory=list)
    pieces: List[Interval] = field(default_factory=list)

    @property
    def t(self) -> int:
        return 1 if self.m <= 2 else (self.m + 1) // 2

    @property
    def is_original(self) -> bool:
        return self.m <= 2
