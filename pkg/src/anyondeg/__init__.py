"""Exact enumeration of level-restricted 3-row tableau walks.

Counts n-step lattice walks with arbitrary-precision integers, derives
their rational generating functions from a block-tridiagonal polynomial
system via fraction-free elimination, and cross-validates the growth
rate (total quantum dimension) three independent ways.
"""

from .lattice import Lattice, ORIGIN, Vertex, adjacency, build_lattice, is_edge
from .pathcount import CountGrid, CountTable, count_paths, degeneracy, \
    table, total_dimension
from .poly import IntPoly, RationalFn, poly_gcd, poly_from_text, poly_to_text
from .genfunc import GenFnSolution, build_system, generating_function, \
    j_matrix, solve_system, system_det, verify_series
from .spectral import SpectralReport, growth_rate_estimate, lambda_perron, \
    lambda_trig, smallest_positive_root, spectral_report
from .syt import Shape3, audit_published_formula, brute_force_count, \
    hook_count, shape_for_vertex, unrestricted_count

__version__ = "0.1.0"

__all__ = [
    "Lattice", "ORIGIN", "Vertex", "adjacency", "build_lattice", "is_edge",
    "CountGrid", "CountTable", "count_paths", "degeneracy", "table",
    "total_dimension",
    "IntPoly", "RationalFn", "poly_gcd", "poly_from_text", "poly_to_text",
    "GenFnSolution", "build_system", "generating_function", "j_matrix",
    "solve_system", "system_det", "verify_series",
    "SpectralReport", "growth_rate_estimate", "lambda_perron", "lambda_trig",
    "smallest_positive_root", "spectral_report",
    "Shape3", "audit_published_formula", "brute_force_count", "hook_count",
    "shape_for_vertex", "unrestricted_count",
]
