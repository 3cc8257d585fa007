"""Extension of scalars from Z to the ring of integers of a catalog field F.

An ideal I of K = Q[x]/(f) becomes the O_F-lattice O_F (x) I inside
L = F[y]/(f).  Principality of such lattices is searched for, not decided:
candidates are the short vectors of the T2 form sum |sigma(x)|^2 over all
complex embeddings of L, and every hit is confirmed by exact lattice
equality.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np

from ..exactmath.enumeration import enumerate_shells_float
from ..exactmath.linalg import inverse, matmul, transpose
from ..exactmath.poly import IntPoly, discriminant
from .algebra import RelativeAlgebra
from .module import Order, ZModule, module_norm
from .verdicts import Found, NotFoundWithinBound

DEFAULT_BOUND_FACTOR = 10**4
DEFAULT_PRECISION = 128
_RESIDUAL = mpmath.mpf(2) ** -32


class NotIrreducible(ValueError):
    """f acquires a root in F; the split path must be used instead."""


def _mp(x):
    x = Fraction(x)
    return mpmath.mpf(x.numerator) / x.denominator


def _to_fraction(x, prec):
    """Exact rational value of an mpmath real (binary floats are dyadic rationals)."""
    sign, man, exp, _ = mpmath.mpf(x)._mpf_
    m = -int(man) if sign else int(man)
    return Fraction(m * 2 ** exp) if exp >= 0 else Fraction(m, 2 ** (-exp))


def square_root_in(d, OF, precision=DEFAULT_PRECISION):
    """An x in O_F with x^2 = d, or None.

    Any square root of an integer is an algebraic integer, so its
    coordinates in the integral basis are integers.  Each sign pattern of
    sqrt(d) across the embeddings of F is tried: the coordinates are solved
    for numerically, rounded, and the candidate checked exactly.
    """
    F = OF.algebra
    d = int(d)
    if F.dim == 1:
        r = math.isqrt(d) if d >= 0 else -1
        return F.elem([r]) if r >= 0 and r * r == d else None
    basis = OF.elements()
    target = F.elem(F.one()) * d
    prec = precision
    while prec <= 8 * precision:
        with mpmath.workprec(prec):
            E = mpmath.matrix(F.dim, F.dim)
            for j, b in enumerate(basis):
                for s, v in enumerate(F.embedding_values(b.coords, prec)):
                    E[s, j] = v
            root = mpmath.sqrt(mpmath.mpc(d))
            tried = set()
            ambiguous = False
            for signs in itertools.product((1, -1), repeat=F.dim):
                rhs = mpmath.matrix([root * s for s in signs])
                try:
                    sol = mpmath.lu_solve(E, rhs)
                except ZeroDivisionError:
                    continue
                coords = []
                ok = True
                for t in range(F.dim):
                    z = sol[t]
                    n = int(mpmath.nint(z.real))
                    if abs(z - n) > mpmath.mpf(1) / 4:
                        ok = False
                        break
                    if abs(z - n) > _RESIDUAL:
                        ambiguous = True
                    coords.append(n)
                if not ok:
                    continue
                coords = tuple(coords)
                if coords in tried:
                    continue
                tried.add(coords)
                x = sum((b * c for b, c in zip(basis, coords)), F.elem([0] * F.dim))
                if x * x == target:
                    return x
            if not ambiguous:
                return None
        prec *= 2
    return None


def _quadratic_or_raise(f):
    f = f if isinstance(f, IntPoly) else IntPoly(f)
    if f.degree != 2:
        raise ValueError("only quadratic f is supported")
    return f


def is_irreducible_over(f, OF, precision=DEFAULT_PRECISION):
    """True iff the quadratic f stays irreducible over F (disc(f) not a square in F)."""
    f = _quadratic_or_raise(f)
    return square_root_in(discriminant(f), OF, precision) is None


def root_in(f, OF, precision=DEFAULT_PRECISION):
    """A root of the monic quadratic f in F, or None."""
    f = _quadratic_or_raise(f)
    x = square_root_in(discriminant(f), OF, precision)
    if x is None:
        return None
    return (x - f[1]) / 2


@dataclass(frozen=True)
class ExtLattice:
    """O_F (x) I inside L = F[y]/(f).

    ``module`` is the rank-(m n) lattice; ``rel_basis`` are the images of
    the Z-basis of I, which form an O_F-basis of the lattice.
    """

    module: ZModule
    order_F: Order
    rel_basis: tuple

    @property
    def algebra(self):
        return self.module.algebra

    @property
    def rank(self):
        return self.module.rank


def k_to_L(L, x):
    """Map an element of K = Q[x]/(f) into L = F[y]/(f)."""
    return L.embed_rel_poly(list(x.coords))


def extend_scalars(I, OF, basis=None, check=True):
    """O_F (x) I as the lattice spanned by v_i b_j.

    ``basis`` overrides the Z-basis v_i of I (for instance an eigenbasis).
    """
    K = I.algebra
    F = OF.algebra
    f = K.poly
    if check and f.degree == 2 and not is_irreducible_over(f, OF):
        raise NotIrreducible(f"{f} is reducible over {F.name}")
    L = RelativeAlgebra(F, f)
    v = list(basis) if basis is not None else I.elements()
    rel = tuple(k_to_L(L, x) for x in v)
    gens = [x * L.embed_base(b) for x in rel for b in OF.elements()]
    return ExtLattice(ZModule.from_generators(L, gens), OF, rel)


def extend_order(O, OF):
    E = extend_scalars(O, OF, check=False)
    return Order.from_module(E.module, check=True)


# --- T2 form ---------------------------------------------------------------

def t2_gram(L, rows, precision=DEFAULT_PRECISION):
    """Gram matrix of T2 on the given coordinate rows, as a rational matrix G
    with x^T G x <= T2(x) for all x (exact when L is totally real)."""
    n = len(rows)
    if L.is_totally_real:
        return tuple(
            tuple(Fraction(L.trace(L.mul(rows[i], rows[j]))) for j in range(n)) for i in range(n)
        )
    # coordinates with large denominators need extra bits before the form is
    # accurate to about 2^-precision relative to its entries
    height = max(max(abs(Fraction(c)), Fraction(c).denominator) for r in rows for c in r)
    wp = precision + 4 * max(int(height).bit_length(), 1) + 16 * L.dim
    with mpmath.workprec(wp):
        vals = [L.embedding_values(r, wp) for r in rows]
        G = [[Fraction(0)] * n for _ in range(n)]
        scale = max((abs(z) for v in vals for z in v), default=mpmath.mpf(1))
        eps = (scale ** 2 + 1) * len(vals[0]) * mpmath.mpf(2) ** (-(wp - 8))
        for i in range(n):
            for j in range(i, n):
                s = mpmath.fsum(vals[i][k] * mpmath.conj(vals[j][k]) for k in range(len(vals[i])))
                q = _to_fraction(mpmath.mpf(s.real), wp)
                G[i][j] = G[j][i] = q
        # shrink the diagonal by n * eps so the rounded form never exceeds T2
        shift = _to_fraction(eps * n, wp) + Fraction(1, 2 ** wp)
        for i in range(n):
            G[i][i] -= shift
    return tuple(tuple(r) for r in G)


def search_bound(bound_factor, rank, nrm):
    """bound_factor * rank * nrm^(2/rank), rounded up to a dyadic rational."""
    with mpmath.workprec(96):
        val = _mp(bound_factor) * rank * mpmath.power(_mp(nrm), mpmath.mpf(2) / rank)
        return Fraction(int(mpmath.ceil(val * 2**20)), 2**20)


def is_principal_extended(X, O, bound_factor=DEFAULT_BOUND_FACTOR, precision=DEFAULT_PRECISION,
                          max_candidates=None):
    """Search for gamma with gamma * O = X.

    X and O are ZModules in the same algebra (or ExtLattices); O must be a
    ring and X an O-module.  Never returns NotPrincipal.  With
    ``max_candidates`` the search may stop early; the result then says
    ``truncated`` and covers only part of the ball.
    """
    X = X.module if isinstance(X, ExtLattice) else X
    O = O.module if isinstance(O, ExtLattice) else O
    if not O.is_ring():
        raise ValueError("O is not a ring")
    if not X.is_module_over(O):
        raise ValueError("lattice is not a module over the ring")
    nrm = module_norm(X, O)
    bound = search_bound(bound_factor, X.rank, nrm)
    found, tried, truncated = find_generator(X, O, nrm, bound, precision, max_candidates)
    if found is not None:
        return Found(found, {"candidates": tried, "bound": bound, "norm": nrm})
    return NotFoundWithinBound(bound, {"candidates": tried, "norm": nrm, "truncated": truncated})


def find_generator(X, O, nrm, bound, precision=DEFAULT_PRECISION, max_candidates=None):
    """First gamma (in T2 shell order) with gamma O = X and T2(gamma) <= bound.

    Candidates are screened by a float norm test, then confirmed exactly.
    Returns (gamma or None, candidates examined, whether the cap stopped it).
    """
    L = X.algebra
    rows = X.rows
    G = t2_gram(L, rows, precision)
    O_elems = O.elements()
    elems = X.elements()
    with mpmath.workprec(64):
        emb = np.array([[complex(z) for z in L.embedding_values(r, 64)] for r in rows])
    target = float(nrm)
    tried = 0
    for _, V in enumerate_shells_float(G, bound):
        if not len(V):
            continue
        vals = V.astype(float) @ emb if V.dtype != object else np.array(V.tolist(), dtype=float) @ emb
        prods = np.prod(np.abs(vals), axis=1)
        hits = np.nonzero(np.abs(prods - target) <= 1e-6 * max(target, 1.0))[0]
        for h in hits:
            v = [int(c) for c in V[h]]
            g = sum((e * c for e, c in zip(elems, v) if c), L.elem([0] * L.dim))
            if abs(g.norm()) != nrm:
                continue
            if ZModule.from_generators(L, [g * w for w in O_elems]) == X:
                return g, tried + int(h) + 1, False
        tried += len(V)
        if max_candidates is not None and tried >= max_candidates:
            return None, tried, True
    return None, tried, False


def mult_matrix_in_basis(x, basis):
    """Column-convention matrix of y -> x y in the given basis of an order:
    column j holds the coordinates of x * basis[j]."""
    B = [b.coords for b in basis]
    Binv = inverse(B)
    cols = [tuple(Fraction(c) for c in _vecmat((x * b).coords, Binv)) for b in basis]
    return transpose(cols)


def _vecmat(v, M):
    return matmul((tuple(v),), M)[0]


__all__ = [
    "DEFAULT_BOUND_FACTOR",
    "ExtLattice",
    "NotIrreducible",
    "extend_order",
    "extend_scalars",
    "find_generator",
    "is_irreducible_over",
    "is_principal_extended",
    "k_to_L",
    "mult_matrix_in_basis",
    "root_in",
    "square_root_in",
    "t2_gram",
]
