"""
Pydantic models for graphs, Gröbner basis elements and analysis reports.
"""

from .graph import Graph, Labeling, BipartiteStar
from .groebner import AdmissiblePath, GroebnerElement, BasisStats, LabelingReport
from .reports import (
    GraphClassification,
    ClosureReport,
    ThreeClosedResult,
    CaterpillarDecomposition,
    LabelingResult,
    PrimeComponent,
    TripleContribution,
    BettiCertificate,
    IdentityCheck,
    CheckResult,
    VerifyReport,
)

__all__ = [
    "Graph",
    "Labeling",
    "BipartiteStar",
    "AdmissiblePath",
    "GroebnerElement",
    "BasisStats",
    "LabelingReport",
    "GraphClassification",
    "ClosureReport",
    "ThreeClosedResult",
    "CaterpillarDecomposition",
    "LabelingResult",
    "PrimeComponent",
    "TripleContribution",
    "BettiCertificate",
    "IdentityCheck",
    "CheckResult",
    "VerifyReport",
]
