"""Exact independence numbers of the signed three-support distance graphs G_n."""

__version__ = "0.1.0"

from .build import SignplaceConfig, build_config, build_gn, build_nagy, complement, from_dimacs, to_dimacs
from .constructions import Construction, cobra, double_cobra, quad_packing, snake
from .formulas import alpha_formula, c_const, chi_lower_bound, nagy_alpha
from .model import Graph, IndependentSet, Signplace, Vertex, degree_of_signplace, dot, is_edge
from .solver import SolveReport, brute_force_mis, max_independent_set, verify_independent

__all__ = [
    "Construction", "Graph", "IndependentSet", "Signplace", "SignplaceConfig", "SolveReport", "Vertex",
    "alpha_formula", "brute_force_mis", "build_config", "build_gn", "build_nagy", "c_const",
    "cobra", "double_cobra", "quad_packing", "snake",
    "chi_lower_bound", "complement", "degree_of_signplace", "dot", "from_dimacs", "is_edge",
    "max_independent_set", "nagy_alpha", "to_dimacs", "verify_independent",
]
