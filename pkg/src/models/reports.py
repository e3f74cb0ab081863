"""
Pydantic models for analysis reports: closure numbers, caterpillar
decompositions, prime components, Betti certificates and verification runs.
"""

from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

from .graph import Labeling


class ClosureReport(BaseModel):
    """Result of the exact closure-number search."""

    m: int = Field(..., description="Closure number: least max element degree over all labelings")
    witness: Labeling = Field(..., description="A labeling attaining m")
    searched: int = Field(..., description="Search nodes (partial labelings) examined")
    exhaustive: bool = Field(..., description="True when the search ruled out every smaller value itself")
    lower_bound: int = Field(2, description="Lower bound the search was allowed to stop at")
    cycle_bound: bool = Field(False, description="Whether the chordless-cycle bound was used to stop early")
    symmetry_pruning: bool = False
    max_n: int = Field(..., description="Guard in force for this search")


class ThreeClosedResult(BaseModel):
    """Answer of the tree 3-closedness decision."""

    answer: bool
    witness: Optional[Labeling] = Field(None, description="Labeling with d(i, i+1) <= 2, when one exists")


class CaterpillarDecomposition(BaseModel):
    """Central path v_1..v_l plus the leaf neighbors N'(v_j) hanging off each path vertex."""

    central_path: Tuple[int, ...]
    leaf_neighbors: Dict[int, Tuple[int, ...]] = Field(
        ..., description="v_j -> N'(v_j) in stored adjacency order")

    @property
    def length(self) -> int:
        """Number of path vertices l."""
        return len(self.central_path)

    def leaves_at(self, position: int) -> Tuple[int, ...]:
        """N'(v_position) for a 1-based path position."""
        return self.leaf_neighbors[self.central_path[position - 1]]

    def leaf_counts(self) -> Tuple[int, ...]:
        return tuple(len(self.leaf_neighbors[v]) for v in self.central_path)


class LabelingResult(BaseModel):
    """A constructed labeling plus the notes gathered while building it."""

    labeling: Labeling
    notes: List[str] = Field(default_factory=list)


class PrimeComponent(BaseModel):
    """
    P_S(G): the variables of S plus the complete-graph binomials on each
    component of G restricted to [n] \\ S.
    """

    s: Tuple[int, ...] = Field(..., description="Cut set S, ascending")
    components: Tuple[Tuple[int, ...], ...] = Field(..., description="Components of [n] \\ S, sorted by minimum")
    n: int

    @property
    def c(self) -> int:
        return len(self.components)

    @property
    def dim_contribution(self) -> int:
        return (self.n - len(self.s)) + self.c

    def to_text(self) -> str:
        s = "{" + ",".join(str(v) for v in self.s) + "}"
        comps = ",".join("{" + ",".join(str(v) for v in comp) + "}" for comp in self.components)
        return f"S={s}; components=[{comps}]; dim=({self.n}-{len(self.s)})+{self.c}={self.dim_contribution}"

    def as_json(self) -> dict:
        return {
            "s": list(self.s),
            "components": [list(c) for c in self.components],
            "dim": self.dim_contribution,
        }


class TripleContribution(BaseModel):
    triple: Tuple[int, int, int]
    rank: int = Field(..., ge=1, le=2, description="Reduced H_0 rank of the independence complex on the triple")


class BettiCertificate(BaseModel):
    """β_{1,3} of an edge ideal with the triples contributing to it."""

    beta13: int
    contributing_triples: List[TripleContribution] = Field(default_factory=list)


class IdentityCheck(BaseModel):
    """Two independently computed sides of a counting identity."""

    lhs: int
    rhs: int
    equal: bool


class CheckResult(BaseModel):
    """Outcome of one named verification check."""

    name: str
    ran: bool
    passed: bool
    cases: int = 0
    skipped_reason: Optional[str] = None
    details: Dict[str, Any] = Field(default_factory=dict)
    failures: List[str] = Field(default_factory=list)


class VerifyReport(BaseModel):
    version: str
    seed: int
    guards: Dict[str, Optional[int]] = Field(..., description="Bounds in force; max_n is None when each check keeps its own")
    checks: List[CheckResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks if c.ran)

    @property
    def skipped(self) -> List[str]:
        return [c.name for c in self.checks if not c.ran]

    @property
    def status(self) -> str:
        """pass only when every check ran and passed; fail if any check failed."""
        if not self.passed:
            return "fail"
        return "incomplete" if self.skipped else "pass"


class GraphClassification(BaseModel):
    """Structural profile of a graph."""

    is_connected: bool
    is_tree: bool
    is_path: bool
    is_cycle: bool
    is_caterpillar: bool
    bridges: List[Tuple[int, int]] = Field(default_factory=list)
    triangle_count: int = Field(..., description="K_3(G), the number of triangles")
