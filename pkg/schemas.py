from pydantic import BaseModel, Field, field_validator
from typing import Optional, List, Dict, Any, Literal, Tuple
import re

# =============================================================================
# VERIFICATION REPORTS
# =============================================================================

ViolationKind = Literal[
    "graph-mismatch-missing-edge",
    "graph-mismatch-extra-edge",
    "non-unit-length",
    "same-vertex-overlap",
    "not-balanced",
    "too-many-parts",
    "vertex-set-mismatch",
    # split certificates
    "missing-representative",
    "unknown-edge",
    "bad-representative",
    "sibling-adjacent",
    "not-unit-interval",
]


class Violation(BaseModel):
    kind: ViolationKind
    witness: Dict[str, Any] = Field(default_factory=dict)


class VerifyReport(BaseModel):
    """Pass/fail result; only the first violation of each kind is recorded"""
    ok: bool = True
    violations: List[Violation] = Field(default_factory=list)

    def add(self, kind: str, **witness: Any) -> None:
        if any(v.kind == kind for v in self.violations):
            return
        self.violations.append(Violation(kind=kind, witness=witness))
        self.ok = False

    def kinds(self) -> List[str]:
        return [v.kind for v in self.violations]


# =============================================================================
# REPRESENTATION FILES
# =============================================================================

_RATIONAL_PATTERN = re.compile(r"^-?[0-9]+(?:/([0-9]+))?$")
_ID_PATTERN = re.compile(r"^[0-9]+$")


class RepresentationDocument(BaseModel):
    """JSON representation file: {"d": int, "vertices": {"<id>": [["<num>","<num>"], ...]}}"""
    d: int = Field(ge=1)
    vertices: Dict[str, List[Tuple[str, str]]]

    @field_validator("vertices")
    @classmethod
    def validate_vertices(cls, value: Dict[str, List[Tuple[str, str]]]):
        for key, intervals in value.items():
            if not _ID_PATTERN.fullmatch(key) or int(key) < 1:
                raise ValueError(f"vertex id must be a positive integer, got {key!r}")
            if not intervals:
                raise ValueError(f"vertex {key} has no intervals")
            for pair in intervals:
                for number in pair:
                    match = _RATIONAL_PATTERN.fullmatch(number.strip())
                    if match is None:
                        raise ValueError(f"vertex {key}: {number!r} is not an integer or p/q rational")
                    if match.group(1) is not None and int(match.group(1)) == 0:
                        raise ValueError(f"vertex {key}: {number!r} has a zero denominator")
        return value


# =============================================================================
# SPLIT SEARCH
# =============================================================================

SplitMode = Literal["disjoint", "nondisjoint"]


class SearchLimits(BaseModel):
    node_budget: int = Field(default=10**9, ge=1)
    wall_clock_budget: float = Field(default=1800.0, gt=0)
    # failed states kept per generation; two generations are held
    memo_limit: int = Field(default=1_000_000, ge=1)


class RepresentativeEdges(BaseModel):
    """Representative pairs (i, j) meaning u_i ~ v_j for the original edge u < v"""
    u: int
    v: int
    pairs: List[Tuple[int, int]]


class SplitSolution(BaseModel):
    split: Dict[int, bool]
    rep_edges: List[RepresentativeEdges]
    internal_edges: List[int] = Field(default_factory=list)
    order: List[Tuple[int, int]] = Field(
        default_factory=list,
        description="Proper order of the representatives (vertex, index) found by the search",
    )

    def split_vertices(self) -> List[int]:
        return sorted(v for v, is_split in self.split.items() if is_split)


class SplitResult(BaseModel):
    verdict: Literal["yes", "no", "exhausted"]
    mode: SplitMode
    solution: Optional[SplitSolution] = None
    nodes: int = 0
    elapsed_seconds: float = 0.0


# =============================================================================
# CONSTRUCTION / CLI OUTPUT
# =============================================================================

class ContainmentReport(BaseModel):
    """How many constructed pieces contain an untransformed input interval"""
    transformed_vertices: int = 0
    pieces: int = 0
    pieces_with_original: int = 0
    first_missing: Optional[Dict[str, Any]] = None


class ClawCheckResult(BaseModel):
    free: bool
    t: Optional[int] = None
    witness: Optional[List[int]] = None


class BenchRow(BaseModel):
    intervals: int
    seconds: float
    ratio: Optional[float] = None
