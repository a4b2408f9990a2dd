"""Exact root data, Weyl-Kac typical dimensions and dimension searches for the
basic classical Lie superalgebras."""

from .enumeration import (SearchReport, TypicalRep, algebra_candidates,
                          b0n_cross_check, enumerate_all, enumerate_typical,
                          min_typical_dim_bound)
from .rootdata import (AlgebraId, RootSystem, build, cartan_matrix, classify,
                       diagram, even_part, parse_algebra, shift)
from .scalar import ALPHA, IDENTICALLY_ZERO, ODD_LABEL, AffineScalar, scal, sym
from .typicality import (HighestWeight, TypicalityReport, from_even_labels,
                         from_g_labels, is_typical, shifted,
                         supplementary_check, typical_dim)
from .weyldim import SimpleFactor, enumerate_labels, semisimple_dim, weyl_dim

__version__ = "0.1.0"

__all__ = [
    "ALPHA", "AffineScalar", "AlgebraId", "HighestWeight", "IDENTICALLY_ZERO",
    "ODD_LABEL", "RootSystem", "SearchReport", "SimpleFactor",
    "TypicalRep", "TypicalityReport", "algebra_candidates", "b0n_cross_check",
    "build", "cartan_matrix", "classify", "diagram", "enumerate_all",
    "enumerate_labels", "enumerate_typical", "even_part", "from_even_labels",
    "from_g_labels", "is_typical", "min_typical_dim_bound", "parse_algebra",
    "scal", "semisimple_dim", "shift", "shifted", "supplementary_check",
    "sym", "typical_dim", "weyl_dim",
]
