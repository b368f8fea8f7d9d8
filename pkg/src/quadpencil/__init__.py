"""Exact decision of rational r-planes on intersections of two quadrics.

For rational quadratic forms f, g in n+1 variables with det(f + t*g) not
identically zero and n in {2r+1, 2r+2}, :func:`decide` answers whether
{f = g = 0} contains a linear subspace of dimension r defined over Q.
"""

from .counterexamples import (
    GenusOneInput,
    bounded_global_search,
    build_remark3_7,
    build_remark3_10,
    lift_to_3space,
    lift_to_5space,
    load_lind_reichardt,
    local_common_zero,
)
from .decision import Case, Problem, Verdict, check_hypothesis, compute_delta, decide
from .errors import (
    BadSpecializationPoint,
    DegenerateForm,
    DimensionMismatch,
    HypothesisViolation,
    InvalidInput,
    QuadPencilError,
)
from .factor import factor_poly
from .forms import (
    Pencil,
    QuadraticFormFF,
    QuadraticFormQ,
    det_poly,
    diagonalize_ff,
    diagonalize_q,
    target_even,
    target_odd,
)
from .globalq import invariants_of, is_isometric_Q, is_isotropic_Q, witt_index_Q
from .local import REAL, Place, hilbert_symbol, is_isotropic_local, local_profile
from .poly import Poly, parse_poly, poly_gcd, resultant, squarefree_part
from .witt_ff import Outcome, is_isometric_ff, is_witt_trivial_ff

__all__ = [
    "GenusOneInput", "bounded_global_search", "build_remark3_7", "build_remark3_10",
    "lift_to_3space", "lift_to_5space", "load_lind_reichardt", "local_common_zero",
    "Case", "Problem", "Verdict", "check_hypothesis", "compute_delta", "decide",
    "BadSpecializationPoint", "DegenerateForm", "DimensionMismatch", "HypothesisViolation",
    "InvalidInput", "QuadPencilError", "factor_poly", "Pencil", "QuadraticFormFF",
    "QuadraticFormQ", "det_poly", "diagonalize_ff", "diagonalize_q", "target_even",
    "target_odd", "invariants_of", "is_isometric_Q", "is_isotropic_Q", "witt_index_Q",
    "REAL", "Place", "hilbert_symbol", "is_isotropic_local", "local_profile", "Poly",
    "parse_poly", "poly_gcd", "resultant", "squarefree_part", "Outcome", "is_isometric_ff",
    "is_witt_trivial_ff",
]
