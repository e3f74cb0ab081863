"""
Pydantic models for admissible paths and the binomials u_π f_ij they produce.
"""

from typing import Dict, List, Tuple

from pydantic import BaseModel, ConfigDict, Field


class AdmissiblePath(BaseModel):
    """Path i = i_0, ..., i_r = j with i < j; validity is checked by admissible_groebner."""

    model_config = ConfigDict(frozen=True)

    vertices: Tuple[int, ...] = Field(..., min_length=2, description="Path vertices from i to j")

    @property
    def i(self) -> int:
        return self.vertices[0]

    @property
    def j(self) -> int:
        return self.vertices[-1]

    @property
    def interior(self) -> Tuple[int, ...]:
        return self.vertices[1:-1]

    @property
    def length(self) -> int:
        """Number of edges."""
        return len(self.vertices) - 1


class GroebnerElement(BaseModel):
    """
    The basis element u_π f_ij attached to an admissible path π from i to j.

    u_π is the product of x_k over interior vertices k > j and y_k over interior
    vertices k < i.
    """

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={
            "example": {
                "path": {"vertices": [1, 4, 3, 5, 2]},
                "x_support": [3, 4, 5],
                "y_support": [],
                "edge": [1, 2],
            }
        },
    )

    path: AdmissiblePath
    x_support: Tuple[int, ...] = Field(..., description="Interior vertices above j, ascending")
    y_support: Tuple[int, ...] = Field(..., description="Interior vertices below i, ascending")
    edge: Tuple[int, int] = Field(..., description="The pair (i, j) of the binomial f_ij")

    @property
    def degree(self) -> int:
        return len(self.x_support) + len(self.y_support) + 2

    def to_text(self) -> str:
        """Canonical form, e.g. "x3*x4*x5*(x1*y2 - x2*y1)"."""
        i, j = self.edge
        factors = [f"x{k}" for k in self.x_support] + [f"y{k}" for k in self.y_support]
        binomial = f"(x{i}*y{j} - x{j}*y{i})"
        return "*".join(factors + [binomial])

    def as_json(self) -> dict:
        return {
            "path": list(self.path.vertices),
            "x": list(self.x_support),
            "y": list(self.y_support),
            "edge": list(self.edge),
        }


class BasisStats(BaseModel):
    """Size and degree profile of a reduced Gröbner basis."""

    size: int = Field(..., description="|G| = number of basis elements")
    max_degree: int = Field(..., description="Largest element degree, 0 for an empty basis")
    degree_histogram: Dict[int, int] = Field(default_factory=dict, description="degree -> element count")


class LabelingReport(BaseModel):
    """Per-labeling statistics of the admissible-path basis."""

    n: int
    edge_count: int
    stats: BasisStats
    excess: int = Field(..., description="|G| - |E|, the non-quadratic part of the basis")
    witness_paths: List[Tuple[int, ...]] = Field(default_factory=list, description="Admissible paths of maximal degree")
    closed: bool = Field(..., description="max_degree <= 2")
