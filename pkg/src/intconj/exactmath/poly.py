"""Dense univariate polynomials with integer or rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd


def _strip(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class IntPoly:
    """Polynomial stored lowest degree first.

    Coefficients are kept as given (ints or Fractions); most of the package
    only ever builds integer polynomials, but division and gcd need Q[x].
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _strip(coeffs)

    @classmethod
    def monomial(cls, degree, c=1):
        return cls([0] * degree + [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_monic(self):
        return self.lc == 1

    def is_zero(self):
        return not self.coeffs

    def is_integral(self):
        return all(Fraction(c).denominator == 1 for c in self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _strip([other])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        return self.format()

    def format(self, var="x"):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if a == 1 else f"{a}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __neg__(self):
        return IntPoly([-c for c in self.coeffs])

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self), len(other))
        return IntPoly([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        result = IntPoly([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self.coeffs]
        q = [Fraction(0)] * max(0, len(rem) - len(other) + 1)
        lc = Fraction(other.lc)
        for k in range(len(rem) - len(other), -1, -1):
            c = rem[k + len(other) - 1] / lc
            q[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return IntPoly(_demote(q)), IntPoly(_demote(rem[: len(other) - 1]))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def derivative(self):
        return IntPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def content(self):
        return reduce(gcd, (int(c) for c in self.coeffs), 0)

    def monic(self):
        lc = Fraction(self.lc)
        return IntPoly(_demote([Fraction(c) / lc for c in self.coeffs]))

    def compose_linear(self, a, b):
        """Return p(a*x + b)."""
        acc = IntPoly()
        lin = IntPoly([b, a])
        for c in reversed(self.coeffs):
            acc = acc * lin + c
        return acc


def _coerce(p):
    if isinstance(p, IntPoly):
        return p
    return IntPoly([p])


def _demote(values):
    return [int(v) if isinstance(v, Fraction) and v.denominator == 1 else v for v in values]


def poly_gcd(a, b):
    """Monic gcd over Q."""
    a, b = _coerce(a), _coerce(b)
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def is_squarefree(f):
    return poly_gcd(f, f.derivative()).degree == 0


def resultant(f, g):
    """Resultant via the determinant of the Sylvester matrix."""
    from .linalg import det

    m, n = f.degree, g.degree
    if m < 0 or n < 0:
        return 0
    if m == 0 and n == 0:
        return 1
    size = m + n
    rows = []
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    for i in range(n):
        rows.append([0] * i + fc + [0] * (size - i - len(fc)))
    for i in range(m):
        rows.append([0] * i + gc + [0] * (size - i - len(gc)))
    return det(rows)


def discriminant(f):
    """Discriminant of f, (-1)^(n(n-1)/2) Res(f, f') / lc(f)."""
    f = _coerce(f)
    n = f.degree
    if n < 1:
        raise ValueError("discriminant of a constant polynomial")
    if n == 1:
        return 1
    r = Fraction(resultant(f, f.derivative())) / f.lc
    if (n * (n - 1) // 2) % 2:
        r = -r
    return int(r) if r.denominator == 1 else r


def integer_roots(f):
    """All integer roots of a nonzero integer polynomial."""
    f = _coerce(f)
    if f.is_zero():
        raise ValueError("zero polynomial has every integer as a root")
    roots = set()
    coeffs = list(f.coeffs)
    shift = 0
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
        shift += 1
    if shift:
        roots.add(0)
    g = IntPoly(coeffs)
    c0 = abs(int(g[0]))
    if g.degree >= 1:
        for d in _divisors(c0):
            for r in (d, -d):
                if g(r) == 0:
                    roots.add(r)
    return sorted(roots)


def _divisors(n):
    from sympy import divisors

    return divisors(n) if n else []
