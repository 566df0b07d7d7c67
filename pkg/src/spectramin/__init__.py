"""Minimum spectral radius of connected graphs: constructions, formulas and exhaustive search."""
from .canonical import CanonicalForm, canonical_form, canonical_graph6, is_isomorphic
from .constructions import FamilySpec, family_minimizer
from .enumeration import count_connected, enumerate_connected
from .errors import (ConvergenceError, Graph6Error, GraphError, InconsistencyError,
                     InfeasibleError, SpectraminError)
from .formulas import RegimePrediction, is_predicted_minimizer, predict
from .graph import Graph, complement, disjoint_union, is_connected, join, make_graph
from .graph6 import from_graph6, to_graph6
from .search import MinimizerReport, minimizers, rho_min_table, verify_hong
from .spectral import (CharPoly, Partition, QuotientMatrix, SpectralResult, char_poly, char_rho,
                       p_mean, quotient_matrix, quotient_spectral_radius, spectral_radius)

__version__ = "0.1.0"

__all__ = [
    "CanonicalForm", "CharPoly", "ConvergenceError", "FamilySpec", "Graph", "Graph6Error",
    "GraphError", "InconsistencyError", "InfeasibleError", "MinimizerReport", "Partition",
    "QuotientMatrix", "RegimePrediction", "SpectraminError", "SpectralResult", "canonical_form",
    "canonical_graph6", "char_poly", "char_rho", "complement", "count_connected",
    "disjoint_union", "enumerate_connected", "family_minimizer", "from_graph6", "is_connected",
    "is_isomorphic", "is_predicted_minimizer", "join", "make_graph", "minimizers", "p_mean",
    "predict", "quotient_matrix", "quotient_spectral_radius", "rho_min_table", "spectral_radius",
    "to_graph6", "verify_hong",
]
