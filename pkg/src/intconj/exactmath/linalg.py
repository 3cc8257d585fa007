"""Exact dense linear algebra over Z and Q.

Matrices are tuples of row tuples.  Entries are Python ints or Fractions;
nothing here ever touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm

from .poly import IntPoly


def as_matrix(rows):
    rows = tuple(tuple(r) for r in rows)
    if rows and len({len(r) for r in rows}) != 1:
        raise ValueError("ragged matrix")
    return rows


def shape(M):
    return len(M), (len(M[0]) if M else 0)


def is_square(M):
    r, c = shape(M)
    return r == c


def identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def zeros(r, c):
    return tuple((0,) * c for _ in range(r))


def transpose(M):
    return tuple(zip(*M)) if M else ()


def matmul(A, B):
    Bt = transpose(B)
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in Bt) for row in A)


def matvec(A, v):
    return tuple(sum(a * b for a, b in zip(row, v)) for row in A)


def vecmat(v, A):
    n = len(A[0]) if A else 0
    out = [0] * n
    for x, row in zip(v, A):
        if x:
            for j, a in enumerate(row):
                out[j] += x * a
    return tuple(out)


def matadd(A, B):
    return tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def matsub(A, B):
    return tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def scalar_mul(c, A):
    return tuple(tuple(c * a for a in row) for row in A)


def hstack(*blocks):
    return tuple(sum((tuple(b[i]) for b in blocks), ()) for i in range(len(blocks[0])))


def vstack(*blocks):
    return tuple(row for b in blocks for row in b)


def normalize_entries(M):
    """Turn integral Fractions into ints so equality and printing are stable."""
    return tuple(
        tuple(int(x) if isinstance(x, Fraction) and x.denominator == 1 else x for x in row)
        for row in M
    )


def common_denominator(M):
    return reduce(lcm, (Fraction(x).denominator for row in M for x in row), 1)


def to_integer(M):
    """Return (N, d) with M = N / d, N integral, d > 0 minimal."""
    d = common_denominator(M)
    return tuple(tuple(int(Fraction(x) * d) for x in row) for row in M), d


def content(values):
    return reduce(gcd, (int(v) for v in values), 0)


def bareiss_det(M):
    """Fraction-free determinant of a square integer matrix."""
    n = len(M)
    if n == 0:
        return 1
    A = [list(r) for r in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            row_i = A[i]
            row_k = A[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return sign * A[n - 1][n - 1]


def det(M):
    if not is_square(M):
        raise ValueError("determinant of a non-square matrix")
    N, d = to_integer(M)
    value = bareiss_det(N)
    if d == 1:
        return value
    out = Fraction(value, d ** len(M))
    return int(out) if out.denominator == 1 else out


def rref(M):
    """Reduced row echelon form over Q; returns (R, pivot_columns)."""
    A = [[Fraction(x) for x in row] for row in M]
    rows, cols = shape(M)
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(rows):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    return tuple(tuple(row) for row in A), tuple(pivots)


def rank(M):
    return len(rref(M)[1]) if M else 0


def inverse(M):
    n = len(M)
    if not is_square(M):
        raise ValueError("inverse of a non-square matrix")
    aug = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(M)]
    R, pivots = rref(aug)
    if pivots[:n] != tuple(range(n)):
        raise ZeroDivisionError("singular matrix")
    return normalize_entries(tuple(row[n:] for row in R))


def solve_rational(M, b):
    """Solve M x = b over Q; returns one solution or None."""
    rows, cols = shape(M)
    aug = [list(M[i]) + [b[i]] for i in range(rows)]
    R, pivots = rref(aug)
    if cols in pivots:
        return None
    x = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        x[c] = R[i][cols]
    return tuple(int(v) if v.denominator == 1 else v for v in x)


def kernel_rational(M):
    """Basis (list of vectors) of the right kernel of M over Q."""
    rows, cols = shape(M)
    R, pivots = rref(M)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [Fraction(0)] * cols
        v[fcol] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -R[i][fcol]
        basis.append(tuple(v))
    return basis


def char_poly(A):
    """det(xI - A) via Faddeev-LeVerrier in exact arithmetic."""
    if not is_square(A):
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = len(A)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    M = zeros(n, n)
    I = identity(n)
    for k in range(1, n + 1):
        M = matadd(matmul(A, M), scalar_mul(coeffs[n - k + 1], I))
        AM = matmul(A, M)
        coeffs[n - k] = -Fraction(sum(AM[i][i] for i in range(n))) / k
    return IntPoly([int(c) if c.denominator == 1 else c for c in coeffs])


def commutator_matrix(A, B):
    """Matrix of X -> A X - X B acting on row-major vec(X)."""
    n = len(A)
    T = [[0] * (n * n) for _ in range(n * n)]
    for i in range(n):
        for j in range(n):
            row = T[i * n + j]
            for k in range(n):
                row[k * n + j] += A[i][k]
                row[i * n + k] -= B[k][j]
    return as_matrix(T)


def vec(X):
    return tuple(x for row in X for x in row)


def unvec(v, n):
    return tuple(tuple(v[i * n:(i + 1) * n]) for i in range(n))
