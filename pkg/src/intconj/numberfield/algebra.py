"""Finite-dimensional commutative Q-algebras with an explicit coordinate basis.

Two concrete kinds are needed:

* ``NumberField``: Q[x]/(g) in its power basis.  Q itself is the degree-one
  field Q[x]/(x).
* ``RelativeAlgebra``: F[y]/(f) for a number field F and a monic integer
  polynomial f, with coordinates (c_0 | c_1 | ... | c_{n-1}) meaning
  sum c_i y^i, each c_i an F-coordinate block.  When f is irreducible over F
  this is the compositum field; when f splits it is still an etale algebra
  and all lattice code keeps working.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property

import mpmath

from ..exactmath.linalg import det, inverse, vecmat
from ..exactmath.poly import IntPoly, is_squarefree


def _frac_tuple(values):
    return tuple(Fraction(v) for v in values)


class Algebra:
    dim: int

    def mul(self, a, b):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def embedding_values(self, coords, prec=128):
        """Images of an element under every complex embedding."""
        raise NotImplementedError

    def elem(self, coords):
        return NFElem(self, coords)

    def __call__(self, coords):
        return self.elem(coords)

    def basis_elements(self):
        return [self.elem([1 if i == j else 0 for j in range(self.dim)]) for i in range(self.dim)]

    def mult_matrix(self, a):
        """Row-convention matrix of y -> a*y on the coordinate basis."""
        a = _frac_tuple(a)
        rows = []
        for i in range(self.dim):
            e = [0] * self.dim
            e[i] = 1
            rows.append(self.mul(a, e))
        return tuple(rows)

    def norm(self, a):
        return det(self.mult_matrix(a))

    def trace(self, a):
        M = self.mult_matrix(a)
        return sum(M[i][i] for i in range(self.dim))

    def inverse(self, a):
        M = self.mult_matrix(a)
        return tuple(Fraction(x) for x in vecmat(self.one(), inverse(M)))

    @cached_property
    def is_totally_real(self):
        raise NotImplementedError


class NumberField(Algebra):
    """Q[x]/(g) for a monic irreducible integer polynomial g."""

    def __init__(self, poly, name=None, check=True):
        poly = poly if isinstance(poly, IntPoly) else IntPoly(poly)
        if poly.degree < 1 or not poly.is_monic or not poly.is_integral():
            raise ValueError(f"defining polynomial must be monic integral of degree >= 1: {poly}")
        if check and not is_irreducible_over_q(poly):
            raise ValueError(f"defining polynomial {poly} is reducible over Q")
        self.poly = poly
        self.dim = poly.degree
        self.name = name or poly.format()
        m = self.dim
        # reductions of x^k, k < 2m - 1, into the power basis
        red = []
        for k in range(2 * m - 1):
            if k < m:
                red.append(tuple(1 if i == k else 0 for i in range(m)))
            else:
                prev = red[k - 1]
                shifted = (0,) + prev[:-1]
                top = prev[-1]
                red.append(tuple(s - top * poly[i] for i, s in enumerate(shifted)))
        self._red = red

    @property
    def degree(self):
        return self.dim

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.poly == other.poly

    def __hash__(self):
        return hash(("NumberField", self.poly))

    def __repr__(self):
        return f"NumberField({self.poly})"

    def one(self):
        return _frac_tuple([1] + [0] * (self.dim - 1))

    def gen(self):
        if self.dim == 1:
            return self.elem([-self.poly[0]])
        return self.elem([0, 1] + [0] * (self.dim - 2))

    def mul(self, a, b):
        m = self.dim
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        out = [Fraction(0)] * m
        for k, c in enumerate(prod):
            if c:
                r = self._red[k]
                for i in range(m):
                    if r[i]:
                        out[i] += c * r[i]
        return tuple(out)

    def from_poly(self, p):
        """Element p(theta) for an IntPoly (or coefficient list) p."""
        p = p if isinstance(p, IntPoly) else IntPoly(p)
        acc = self.elem([0] * self.dim)
        theta = self.gen()
        power = self.elem(self.one())
        for c in p.coeffs:
            acc = acc + power * c
            power = power * theta
        return acc

    @cached_property
    def _roots_cache(self):
        return {}

    def roots(self, prec=128):
        """Complex roots of the defining polynomial, real ones first, stably ordered."""
        if prec not in self._roots_cache:
            with mpmath.workprec(prec):
                if self.dim == 1:
                    rts = [mpmath.mpc(-self.poly[0])]
                else:
                    rts = mpmath.polyroots(
                        [int(c) for c in reversed(self.poly.coeffs)],
                        maxsteps=400,
                        extraprec=2 * prec,
                    )
                rts = [mpmath.mpc(r) for r in rts]
                rts.sort(key=lambda z: (abs(z.imag) > mpmath.mpf(2) ** (-prec // 2), float(z.real), float(z.imag)))
            self._roots_cache[prec] = rts
        return self._roots_cache[prec]

    def embedding_values(self, coords, prec=128):
        with mpmath.workprec(prec):
            out = []
            for r in self.roots(prec):
                acc = mpmath.mpc(0)
                for c in reversed(coords):
                    acc = acc * r + mpmath.mpf(Fraction(c).numerator) / Fraction(c).denominator
                out.append(acc)
            return out

    @cached_property
    def is_totally_real(self):
        return real_root_count(self.poly) == self.dim


class RelativeAlgebra(Algebra):
    """F[y]/(f) for f a monic integer polynomial."""

    def __init__(self, base, poly):
        poly = poly if isinstance(poly, IntPoly) else IntPoly(poly)
        if not poly.is_monic or not poly.is_integral() or poly.degree < 1:
            raise ValueError("relative polynomial must be monic integral")
        if not is_squarefree(poly):
            raise ValueError("relative polynomial must be square-free")
        self.base = base
        self.poly = poly
        self.rel_degree = poly.degree
        self.dim = base.dim * poly.degree

    def __eq__(self, other):
        return (
            isinstance(other, RelativeAlgebra)
            and self.base == other.base
            and self.poly == other.poly
        )

    def __hash__(self):
        return hash(("RelativeAlgebra", self.base, self.poly))

    def __repr__(self):
        return f"RelativeAlgebra({self.base.poly}, {self.poly})"

    def blocks(self, coords):
        m = self.base.dim
        return [tuple(coords[i * m:(i + 1) * m]) for i in range(self.rel_degree)]

    def from_blocks(self, blocks):
        return tuple(Fraction(x) for b in blocks for x in b)

    def one(self):
        m = self.base.dim
        return _frac_tuple([1] + [0] * (self.dim - 1)) if m else ()

    def gen(self):
        """The root y of f."""
        n, m = self.rel_degree, self.base.dim
        if n == 1:
            return self.elem([Fraction(-self.poly[0])] + [0] * (m - 1))
        c = [0] * self.dim
        c[m] = 1
        return self.elem(c)

    def embed_base(self, x):
        """F-element (coords or NFElem) as an element of the algebra."""
        x = x.coords if isinstance(x, NFElem) else x
        m = self.base.dim
        return self.elem(list(x) + [0] * (self.dim - m))

    def embed_rel_poly(self, coeffs):
        """Element sum coeffs[i] * y^i for rational coeffs (a K-element)."""
        n, m = self.rel_degree, self.base.dim
        blocks = []
        for i in range(n):
            c = coeffs[i] if i < len(coeffs) else 0
            blocks.append([c] + [0] * (m - 1))
        return self.elem(self.from_blocks(blocks))

    def mul(self, a, b):
        F = self.base
        n, m = self.rel_degree, F.dim
        A = self.blocks(a)
        B = self.blocks(b)
        prod = [[Fraction(0)] * m for _ in range(2 * n - 1)]
        for i, x in enumerate(A):
            if not any(x):
                continue
            for j, y in enumerate(B):
                if not any(y):
                    continue
                xy = F.mul(x, y)
                acc = prod[i + j]
                for t in range(m):
                    acc[t] += xy[t]
        f = self.poly
        for k in range(2 * n - 2, n - 1, -1):
            top = prod[k]
            if any(top):
                for i in range(n):
                    c = f[i]
                    if c:
                        row = prod[k - n + i]
                        for t in range(m):
                            row[t] -= c * top[t]
        return tuple(x for blk in prod[:n] for x in blk)

    def embedding_values(self, coords, prec=128):
        F = self.base
        with mpmath.workprec(prec):
            rel_roots = [
                mpmath.mpc(r)
                for r in mpmath.polyroots(
                    [int(c) for c in reversed(self.poly.coeffs)], maxsteps=400, extraprec=2 * prec
                )
            ] if self.rel_degree > 1 else [mpmath.mpc(-self.poly[0])]
            blocks = self.blocks(coords)
            block_vals = [F.embedding_values(b, prec) for b in blocks]
            out = []
            for s in range(F.dim):
                for a in rel_roots:
                    acc = mpmath.mpc(0)
                    for i in range(self.rel_degree - 1, -1, -1):
                        acc = acc * a + block_vals[i][s]
                    out.append(acc)
            return out

    @cached_property
    def is_totally_real(self):
        return self.base.is_totally_real and real_root_count(self.poly) == self.poly.degree


class NFElem:
    """Element of an Algebra, stored as a tuple of Fractions."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra, coords):
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != algebra.dim:
            raise ValueError(f"expected {algebra.dim} coordinates, got {len(coords)}")
        self.algebra = algebra
        self.coords = coords

    def _coerce(self, other):
        if isinstance(other, NFElem):
            if other.algebra != self.algebra:
                raise ValueError("elements of different algebras")
            return other
        if isinstance(other, (int, Fraction)):
            return NFElem(self.algebra, [c * other for c in self.algebra.one()])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return NFElem(self.algebra, [a + b for a, b in zip(self.coords, other.coords)])

    __radd__ = __add__

    def __neg__(self):
        return NFElem(self.algebra, [-a for a in self.coords])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return NFElem(self.algebra, [a - b for a, b in zip(self.coords, other.coords)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return NFElem(self.algebra, [a * other for a in self.coords])
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return NFElem(self.algebra, self.algebra.mul(self.coords, other.coords))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return NFElem(self.algebra, [a / other for a in self.coords])
        other = self._coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = NFElem(self.algebra, self.algebra.one())
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self._coerce(other)
        return (
            isinstance(other, NFElem)
            and other.algebra == self.algebra
            and other.coords == self.coords
        )

    def __hash__(self):
        return hash(self.coords)

    def __bool__(self):
        return any(self.coords)

    def __repr__(self):
        return f"NFElem({[str(c) for c in self.coords]})"

    def inverse(self):
        return NFElem(self.algebra, self.algebra.inverse(self.coords))

    def norm(self):
        return self.algebra.norm(self.coords)

    def trace(self):
        return self.algebra.trace(self.coords)

    def is_rational(self):
        return all(c == 0 for c in self.coords[1:])


def is_irreducible_over_q(poly):
    """Exact irreducibility test for an integer polynomial over Q."""
    from sympy import Poly, symbols

    x = symbols("x")
    p = Poly([int(c) for c in reversed(poly.coeffs)], x)
    if p.degree() < 1:
        return False
    return p.is_irreducible


def real_root_count(poly):
    from sympy import Poly, symbols

    x = symbols("x")
    return Poly([int(c) for c in reversed(poly.coeffs)], x).count_roots()


QQ = NumberField(IntPoly([0, 1]), name="Q")
