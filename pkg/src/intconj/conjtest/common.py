"""Input checks shared by the decision procedures."""

from __future__ import annotations

from ..exactmath.linalg import as_matrix, char_poly
from ..exactmath.poly import is_squarefree
from ..lm import CharPolyMismatch
from ..numberfield.algebra import is_irreducible_over_q


def shared_char_poly(A, B):
    A, B = as_matrix(A), as_matrix(B)
    if len(A) != len(B) or any(len(r) != len(A) for r in A + B):
        raise ValueError("A and B must be square of the same size")
    fa, fb = char_poly(A), char_poly(B)
    if fa != fb:
        raise CharPolyMismatch(f"characteristic polynomials differ: {fa} vs {fb}")
    return A, B, fa


def require_squarefree(f):
    if not is_squarefree(f):
        raise ValueError(f"characteristic polynomial {f} is not square-free")


def require_irreducible(f):
    require_squarefree(f)
    if not is_irreducible_over_q(f):
        raise ValueError(f"characteristic polynomial {f} is reducible")
