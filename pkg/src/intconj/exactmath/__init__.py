"""Exact integer/rational kernels: polynomials, matrices, normal forms, enumeration."""

from .enumeration import NotPositiveDefinite, QuadForm, enumerate_short, lll_gram, short_vectors
from .linalg import (
    as_matrix,
    char_poly,
    commutator_matrix,
    det,
    identity,
    inverse,
    matmul,
    matvec,
    rank,
    transpose,
)
from .normal_forms import SNFResult, hnf, is_hnf, lattice_basis, snf, solve_integer, xgcd
from .poly import IntPoly, discriminant, integer_roots, is_squarefree, poly_gcd, resultant

__all__ = [
    "IntPoly",
    "NotPositiveDefinite",
    "QuadForm",
    "SNFResult",
    "as_matrix",
    "char_poly",
    "commutator_matrix",
    "det",
    "discriminant",
    "enumerate_short",
    "hnf",
    "identity",
    "integer_roots",
    "inverse",
    "is_hnf",
    "is_squarefree",
    "lattice_basis",
    "lll_gram",
    "matmul",
    "matvec",
    "poly_gcd",
    "rank",
    "resultant",
    "short_vectors",
    "snf",
    "solve_integer",
    "transpose",
    "xgcd",
]
