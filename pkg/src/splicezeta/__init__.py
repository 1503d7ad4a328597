"""Exact combinatorial invariants of splice diagrams and plumbing graphs."""

from .diagrams import (
    DiagramError,
    Edge,
    Farrow,
    PlumbingGraph,
    PVertex,
    SpliceDiagram,
    ValidationReport,
    Warrow,
    blowup,
    edge_determinant,
    normalize,
    plumbing_to_splice,
    validate,
    validate_plumbing,
)
from .divisors import (
    canonical_plumbing,
    nu_values,
    pullback_plumbing,
    vertex_multiplicities,
)
from .exact import (
    CycloProduct,
    NegativeMultiplicityError,
    NonLinearDenominatorError,
    Pole,
    Poly,
    RatFunc,
    UnityRoot,
)
from .zeta import ZetaResult, zeta_plumbing, zeta_splice

__all__ = [
    "CycloProduct",
    "DiagramError",
    "Edge",
    "Farrow",
    "NegativeMultiplicityError",
    "NonLinearDenominatorError",
    "PlumbingGraph",
    "Pole",
    "Poly",
    "PVertex",
    "RatFunc",
    "SpliceDiagram",
    "UnityRoot",
    "ValidationReport",
    "Warrow",
    "ZetaResult",
    "blowup",
    "canonical_plumbing",
    "edge_determinant",
    "normalize",
    "nu_values",
    "plumbing_to_splice",
    "pullback_plumbing",
    "validate",
    "validate_plumbing",
    "vertex_multiplicities",
    "zeta_plumbing",
    "zeta_splice",
]

__version__ = "0.1.0"
