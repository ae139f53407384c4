"""Exact-arithmetic toolkit for constant-rook-sum boards (G-matrices):
validation, label decomposition, board generation, lattice-point counting
via three closed formulas with brute-force oracles, the unimodular
triangulation and half-open decomposition of the underlying polytope, and
the Gale duality with the Birkhoff polytope of doubly stochastic matrices.
"""

from .boards import BoardDocument, BoardParseError
from .counting import (BudgetExceededError, CountingPolynomial, FStarVector,
                       RootsReport, binom, f_star, f_star_by_enumeration,
                       g_bruteforce, g_formula_1, g_formula_2, g_formula_3,
                       g_labeling_oracle, halfopen_simplex_count,
                       interior_count_bruteforce, interpolate,
                       open_simplex_count, roots_check, simplex_count)
from .duality import (AffineSubspace, GaleDualPair, GalePairReport,
                      GorensteinReport, HDescription, Permutation,
                      birkhoff_hull, compressed_check, dual_subspace,
                      gale_pair_check, gale_pair_from_recipe, gardner_hull,
                      gorenstein_check, is_doubly_stochastic, pairing,
                      permutation_matrix, permutations_of)
from .matrix import (FACTORIAL_GUARD, FactorialGuardError, FastCheck, GMatrix,
                     Labeling, SquareMatrix, Witness, compose,
                     decompose_canonical, is_g_matrix_bruteforce,
                     is_g_matrix_fast, permutation_sum, scale, trick_generate)
from .polytope import (HalfOpenSimplex, LatticeSimplex, Vertex, all_vertices,
                       affine_hull_residual, barycentric, cell_intersection,
                       circuit_check, col_vertex, halfopen_cells,
                       halfopen_contains, locate, project_pi, row_vertex,
                       triangulation_cells, unimodularity_check, vertex_matrix)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
