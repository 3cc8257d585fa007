"""Small dense linear algebra over a number field (entries are NFElems)."""

from __future__ import annotations


def _zero(F):
    return F.elem([0] * F.dim)


def _one(F):
    return F.elem(F.one())


def rref(M, F):
    """Reduced row echelon form over F; returns (rows, pivot_columns)."""
    A = [list(r) for r in M]
    rows = len(A)
    cols = len(A[0]) if A else 0
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = A[r][c].inverse()
        A[r] = [x * inv for x in A[r]]
        for i in range(rows):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    return A, pivots


def kernel(M, F):
    """Basis of the right kernel {v : M v = 0} over F."""
    cols = len(M[0])
    R, pivots = rref(M, F)
    out = []
    for fcol in (c for c in range(cols) if c not in pivots):
        v = [_zero(F) for _ in range(cols)]
        v[fcol] = _one(F)
        for i, c in enumerate(pivots):
            v[c] = -R[i][fcol]
        out.append(v)
    return out


def inverse(M, F):
    n = len(M)
    aug = [list(row) + [_one(F) if i == j else _zero(F) for j in range(n)] for i, row in enumerate(M)]
    R, pivots = rref(aug, F)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix over the field")
    return [row[n:] for row in R]


def matmul(A, B, F):
    n, m, p = len(A), len(B), len(B[0])
    return [[sum((A[i][k] * B[k][j] for k in range(m)), _zero(F)) for j in range(p)] for i in range(n)]


def det(M, F):
    n = len(M)
    A = [list(r) for r in M]
    d = _one(F)
    for c in range(n):
        piv = next((i for i in range(c, n) if A[i][c]), None)
        if piv is None:
            return _zero(F)
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            d = -d
        d = d * A[c][c]
        inv = A[c][c].inverse()
        for i in range(c + 1, n):
            if A[i][c]:
                f = A[i][c] * inv
                A[i] = [a - f * b for a, b in zip(A[i], A[c])]
    return d


def from_int_matrix(M, F):
    return [[_one(F) * int(x) for x in row] for row in M]
