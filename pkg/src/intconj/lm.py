"""Matrices with irreducible characteristic polynomial f versus ideals of Z[alpha].

A matrix A corresponds to the lattice spanned by the coordinates of an
eigenvector v with A v = alpha v: row i of A lists the coordinates of
alpha * v_i in the basis (v_1, ..., v_n).  Conjugating A by U in GL_n(Z)
changes the basis but not the lattice, and scaling v changes the lattice
only within its ideal class.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .exactmath.linalg import as_matrix, char_poly, inverse, vecmat
from .exactmath.poly import IntPoly
from .numberfield import fieldlinalg as fl
from .numberfield.algebra import NumberField
from .numberfield.module import Order, ZModule
from .numberfield.quadratic import class_reps_quadratic, overorders


class CharPolyMismatch(ValueError):
    pass


@dataclass(frozen=True)
class LMPair:
    matrix: tuple
    ideal: ZModule
    eigenbasis: tuple

    @property
    def field(self):
        return self.ideal.algebra


def _as_poly(f):
    return f if isinstance(f, IntPoly) else IntPoly(f)


def _normalize_eigenvector(v):
    """Scale so every coordinate is an integer polynomial in alpha with joint
    content 1 and the first nonzero entry has positive leading coefficient."""
    first = next(x for x in v if x)
    v = [x / first for x in v]
    den = 1
    for x in v:
        for c in x.coords:
            den = lcm(den, Fraction(c).denominator)
    ints = [[int(Fraction(c) * den) for c in x.coords] for x in v]
    g = 0
    for row in ints:
        for c in row:
            g = gcd(g, c)
    scale = Fraction(den, g)
    first = next(x for x in v if x)
    lead = next(c for c in reversed(first.coords) if c)
    if lead < 0:
        scale = -scale
    return tuple(x * scale for x in v)


def eigenvector(A, K):
    """Normalized v over K with A v = alpha v, alpha the generator of K."""
    n = len(A)
    alpha = K.gen()
    M = [[K.elem(K.one()) * int(A[i][j]) - (alpha if i == j else 0) for j in range(n)] for i in range(n)]
    ker = fl.kernel(M, K)
    if len(ker) != 1:
        raise ValueError("eigenspace is not one-dimensional")
    return _normalize_eigenvector(ker[0])


def matrix_to_ideal(A, f, K=None):
    """The LM pair of A: the ideal spanned by an eigenvector of A."""
    A = as_matrix(A)
    f = _as_poly(f)
    if char_poly(A) != f:
        raise CharPolyMismatch(f"char poly of {A} is {char_poly(A)}, not {f}")
    K = K or NumberField(f)
    v = eigenvector(A, K)
    I = ZModule.from_generators(K, list(v))
    return LMPair(A, I, v)


def ideal_to_matrix(I, basis=None):
    """Matrix of multiplication by alpha on ``basis`` (default: triangular basis of I)."""
    K = I.algebra
    basis = tuple(basis) if basis is not None else tuple(I.triangular_basis())
    alpha = K.gen()
    if not all(I.contains(alpha * x) for x in I.elements()):
        raise ValueError("lattice is not stable under multiplication by alpha")
    B = [x.coords for x in basis]
    Binv = inverse(B)
    rows = []
    for x in basis:
        coords = vecmat((alpha * x).coords, Binv)
        if any(Fraction(c).denominator != 1 for c in coords):
            raise ValueError("basis does not span an alpha-stable lattice")
        rows.append(tuple(int(c) for c in coords))
    return as_matrix(rows)


def pair_from_ideal(I, basis=None):
    basis = tuple(basis) if basis is not None else tuple(I.triangular_basis())
    return LMPair(ideal_to_matrix(I, basis), I, basis)


def classify(f):
    """One LMPair per Z-conjugacy class of integer matrices with char poly f.

    Classes are grouped by multiplicator ring, from Z[alpha] up to the
    maximal order, and ordered by ideal norm inside each group.
    """
    f = _as_poly(f)
    if f.degree != 2:
        raise ValueError("classification is offered for quadratic f only")
    K = NumberField(f)
    Z_alpha = Order.equation_order(K)
    out = []
    for O in overorders(Z_alpha):
        for I in class_reps_quadratic(O):
            out.append(pair_from_ideal(I))
    return out


class LatticeMismatch(ValueError):
    pass


def conjugator_from_bases(A, B, v, w, gamma, F, check=True):
    """C over F with v = C (gamma w), so that A C = C B.

    v and w are eigenbases (A v = alpha v, B w = alpha w) living in an
    algebra L = F[y]/(f); gamma lies in L.  Entries of C are F-elements.
    """
    L = gamma.algebra
    gw = [gamma * x for x in w]
    W = [[F.elem(blk) for blk in L.blocks(x.coords)] for x in gw]
    V = [[F.elem(blk) for blk in L.blocks(x.coords)] for x in v]
    C = fl.matmul(V, fl.inverse(W, F), F)
    if check:
        Af = fl.from_int_matrix(A, F)
        Bf = fl.from_int_matrix(B, F)
        if fl.matmul(Af, C, F) != fl.matmul(C, Bf, F):
            raise LatticeMismatch("computed C does not intertwine A and B")
    return C


__all__ = [
    "CharPolyMismatch",
    "LMPair",
    "LatticeMismatch",
    "classify",
    "conjugator_from_bases",
    "eigenvector",
    "ideal_to_matrix",
    "matrix_to_ideal",
    "pair_from_ideal",
]
