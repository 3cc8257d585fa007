"""Maximal orders by repeated p-radical enlargement.

For an order O and a prime p, the p-radical R = {x in O : x^(p^j) in pO}
(with p^j >= degree) is computed as the kernel of Frobenius on O/pO.  The
multiplicator ring of R contains O, and equals O exactly when O is
p-maximal; iterating until it stops growing gives the p-maximal order.
"""

from __future__ import annotations

from fractions import Fraction

from sympy import factorint

from .module import Order, ZModule, multiplicator_ring


def kernel_mod_p(M, p):
    """Basis of {c : c M = 0 mod p} for an integer matrix M (rows act on the left)."""
    rows = len(M)
    cols = len(M[0]) if rows else 0
    # Work on the transpose: solve M^T c = 0.
    A = [[M[i][j] % p for i in range(rows)] for j in range(cols)]
    pivots = []
    r = 0
    for c in range(rows):
        piv = next((i for i in range(r, cols) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = pow(A[r][c], -1, p)
        A[r] = [x * inv % p for x in A[r]]
        for i in range(cols):
            if i != r and A[i][c]:
                t = A[i][c]
                A[i] = [(x - t * y) % p for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == cols:
            break
    free = [c for c in range(rows) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * rows
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = -A[i][fc] % p
        basis.append(v)
    return basis


def _power_mod(x, e, O, p):
    """x^e reduced mod pO, in O-coordinates."""
    elems = O.elements()

    def reduce(y):
        c = [int(t) % p for t in O.coordinates(y)]
        return sum((b * t for b, t in zip(elems, c) if t), O.algebra.elem([0] * O.algebra.dim))

    result = O.algebra.elem(O.algebra.one())
    base = reduce(x)
    while e:
        if e & 1:
            result = reduce(result * base)
        base = reduce(base * base)
        e >>= 1
    return [int(t) % p for t in O.coordinates(result)]


def p_radical(O, p):
    n = O.algebra.dim
    q = p
    while q < n:
        q *= p
    elems = O.elements()
    frob = [_power_mod(e, q, O, p) for e in elems]
    ker = kernel_mod_p(frob, p)
    gens = [e * p for e in elems]
    for v in ker:
        gens.append(sum((e * c for e, c in zip(elems, v) if c), O.algebra.elem([0] * n)))
    return ZModule.from_generators(O.algebra, gens)


def p_maximal(O, p):
    while True:
        bigger = Order.from_module(multiplicator_ring(p_radical(O, p)))
        if bigger == O:
            return O
        O = bigger


def maximal_order(F, start=None):
    """Ring of integers of F, starting from ``start`` (default Z[beta])."""
    O = start or Order.equation_order(F)
    d = O.discriminant()
    for p, e in factorint(abs(int(d))).items():
        if e >= 2:
            O = p_maximal(O, int(p))
    return O


def integral_basis_rows(O):
    """Basis rows of O as Fractions in power-basis coordinates."""
    return [[Fraction(c) for c in row] for row in O.rows]
