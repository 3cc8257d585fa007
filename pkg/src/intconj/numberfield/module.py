"""Full-rank Z-lattices inside an algebra: fractional ideals and orders."""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from math import gcd

from ..exactmath.linalg import det, inverse, to_integer, transpose, vecmat
from ..exactmath.normal_forms import lattice_basis
from .algebra import NFElem


class RankError(ValueError):
    pass


class ZModule:
    """The lattice (1/denominator) * rowspan(basis) in coordinates of ``algebra``.

    ``basis`` is always the full-rank row HNF; ``denominator`` is coprime to
    the content of ``basis``.  Two ZModules are equal iff their lattices are.
    """


    def __init__(self, algebra, basis, denominator=1):
        basis = tuple(tuple(int(x) for x in row) for row in basis)
        d = algebra.dim
        if len(basis) != d or any(len(r) != d for r in basis):
            raise RankError(f"basis must be {d}x{d}")
        if denominator <= 0:
            raise ValueError("denominator must be positive")
        g = gcd(denominator, *[x for row in basis for x in row])
        if g > 1:
            basis = tuple(tuple(x // g for x in row) for row in basis)
            denominator //= g
        basis = lattice_basis(basis, d)
        if len(basis) != d:
            raise RankError("basis is rank deficient")
        self.algebra = algebra
        self.basis = basis
        self.denominator = denominator

    @classmethod
    def from_generators(cls, algebra, gens):
        """Lattice spanned by NFElems or rational coordinate vectors."""
        rows = [g.coords if isinstance(g, NFElem) else tuple(Fraction(x) for x in g) for g in gens]
        if not rows:
            raise RankError("no generators")
        N, den = to_integer(rows)
        basis = lattice_basis(N, algebra.dim)
        if len(basis) != algebra.dim:
            raise RankError(f"generators span rank {len(basis)} < {algebra.dim}")
        return cls(algebra, basis, den)

    def __eq__(self, other):
        return (
            isinstance(other, ZModule)
            and self.algebra == other.algebra
            and self.basis == other.basis
            and self.denominator == other.denominator
        )

    def __hash__(self):
        return hash((self.basis, self.denominator))

    def __repr__(self):
        return f"ZModule(basis={[list(r) for r in self.basis]}, denominator={self.denominator})"

    @property
    def rank(self):
        return self.algebra.dim

    @cached_property
    def rows(self):
        """Rational coordinate rows of the HNF basis."""
        d = self.denominator
        return tuple(tuple(Fraction(x, d) for x in row) for row in self.basis)

    def elements(self):
        return [self.algebra.elem(r) for r in self.rows]

    @cached_property
    def _inverse_rows(self):
        return inverse(self.rows)

    def coordinates(self, x):
        """Coefficients of x in the HNF basis (rational)."""
        v = x.coords if isinstance(x, NFElem) else x
        return vecmat(v, self._inverse_rows)

    def contains(self, x):
        return all(Fraction(c).denominator == 1 for c in self.coordinates(x))

    __contains__ = contains

    def issubset(self, other):
        return all(other.contains(r) for r in self.rows)

    def __le__(self, other):
        return self.issubset(other)

    @cached_property
    def covolume(self):
        return abs(Fraction(det(self.basis), self.denominator ** self.rank))

    def index_in(self, other):
        """Generalized index [other : self] = covol(self) / covol(other)."""
        return self.covolume / other.covolume

    def __add__(self, other):
        return ZModule.from_generators(self.algebra, list(self.rows) + list(other.rows))

    def __mul__(self, other):
        A = self.algebra
        if isinstance(other, ZModule):
            gens = [A.mul(a, b) for a in self.rows for b in other.rows]
            return ZModule.from_generators(A, gens)
        if isinstance(other, NFElem):
            other = other.coords
        elif isinstance(other, (int, Fraction)):
            return ZModule.from_generators(A, [[x * other for x in r] for r in self.rows])
        return ZModule.from_generators(A, [A.mul(r, other) for r in self.rows])

    __rmul__ = __mul__

    def scale(self, x):
        return self * x

    def dual(self):
        """Coordinate dual lattice {y : <y, x> in Z for all x in self}."""
        return ZModule.from_generators(self.algebra, transpose(inverse(self.rows)))

    def intersection(self, other):
        return (self.dual() + other.dual()).dual()

    def contains_one(self):
        return self.contains(self.algebra.one())

    def is_closed_under_mult(self):
        A = self.algebra
        rows = self.rows
        return all(self.contains(A.mul(a, b)) for i, a in enumerate(rows) for b in rows[i:])

    def is_ring(self):
        return self.contains_one() and self.is_closed_under_mult()

    def is_module_over(self, ring):
        A = self.algebra
        return all(self.contains(A.mul(o, x)) for o in ring.rows for x in self.rows)

    def triangular_basis(self):
        """Basis (v_1, ..., v_d) lower triangular in the coordinate order.

        v_1 is the positive generator of the lattice meet the first
        coordinate axis, v_2 involves only the first two coordinates, and
        so on.  For a quadratic ideal this is the classical a Z + (b + c x) Z.
        """
        d = self.rank
        rev = [tuple(reversed(r)) for r in self.basis]
        H = lattice_basis(rev, d)
        out = []
        for row in reversed(H):
            coords = tuple(Fraction(x, self.denominator) for x in reversed(row))
            out.append(self.algebra.elem(coords))
        return out


class Order(ZModule):
    """A ZModule that is a ring with 1."""

    def __init__(self, algebra, basis, denominator=1, check=True):
        super().__init__(algebra, basis, denominator)
        if check and not self.is_ring():
            raise ValueError("lattice is not a ring containing 1")

    @classmethod
    def from_module(cls, M, check=True):
        return cls(M.algebra, M.basis, M.denominator, check=check)

    @classmethod
    def from_generators(cls, algebra, gens, check=True):
        M = ZModule.from_generators(algebra, gens)
        return cls.from_module(M, check=check)

    @classmethod
    def equation_order(cls, algebra, gen=None):
        """Z[gen] (default: the algebra generator)."""
        gen = gen if gen is not None else algebra.gen()
        powers = [algebra.elem(algebra.one())]
        for _ in range(algebra.dim - 1):
            powers.append(powers[-1] * gen)
        return cls.from_generators(algebra, powers)

    def __repr__(self):
        return f"Order(basis={[list(r) for r in self.basis]}, denominator={self.denominator})"

    def discriminant(self):
        A = self.algebra
        rows = self.rows
        return det([[A.trace(A.mul(a, b)) for b in rows] for a in rows])


def colon(M, N):
    """(M : N) = {x : x N subset of M}.

    Each condition x n_k in M says x lies in n_k^{-1} M; the intersection is
    taken through dual lattices.
    """
    if M.algebra != N.algebra:
        raise ValueError("modules live in different algebras")
    A = M.algebra
    pieces = []
    for n in N.rows:
        n_inv = A.inverse(n)
        pieces.append(ZModule.from_generators(A, [A.mul(m, n_inv) for m in M.rows]))
    dual_gens = [r for P in pieces for r in P.dual().rows]
    return ZModule.from_generators(A, dual_gens).dual()


def multiplicator_ring(M):
    return Order.from_module(colon(M, M), check=True)


def module_norm(I, O):
    """Generalized index [O : I]."""
    if I.algebra != O.algebra:
        raise ValueError("modules live in different algebras")
    return I.index_in(O)
