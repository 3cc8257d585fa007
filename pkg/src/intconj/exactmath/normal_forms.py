"""Hermite and Smith normal forms with unimodular transforms."""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import as_matrix, identity, matvec, shape


def xgcd(a, b):
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def _row_axpy(rows, dst, src, q):
    """rows[dst] -= q * rows[src]"""
    if q:
        rows[dst] = [a - q * b for a, b in zip(rows[dst], rows[src])]


def hnf(M):
    """Row Hermite normal form.

    Returns (H, U) with U unimodular and U*M = H.  Nonzero rows of H come
    first, pivots are positive and entries above a pivot lie in [0, pivot).
    """
    M = as_matrix(M)
    m, n = shape(M)
    A = [list(r) for r in M]
    U = [list(r) for r in identity(m)]
    r = 0
    for c in range(n):
        if r == m:
            break
        while True:
            live = [i for i in range(r, m) if A[i][c] != 0]
            if not live:
                break
            piv = min(live, key=lambda i: (abs(A[i][c]), i))
            if piv != r:
                A[r], A[piv] = A[piv], A[r]
                U[r], U[piv] = U[piv], U[r]
            if len(live) == 1:
                break
            p = A[r][c]
            for i in range(r + 1, m):
                if A[i][c]:
                    q = A[i][c] // p
                    _row_axpy(A, i, r, q)
                    _row_axpy(U, i, r, q)
        if A[r][c] == 0:
            continue
        if A[r][c] < 0:
            A[r] = [-x for x in A[r]]
            U[r] = [-x for x in U[r]]
        p = A[r][c]
        for i in range(r):
            q = A[i][c] // p
            _row_axpy(A, i, r, q)
            _row_axpy(U, i, r, q)
        r += 1
    return as_matrix(A), as_matrix(U)


def is_hnf(H):
    m, n = shape(H)
    last_pivot = -1
    seen_zero = False
    for i, row in enumerate(H):
        nz = [j for j, x in enumerate(row) if x]
        if not nz:
            seen_zero = True
            continue
        if seen_zero:
            return False
        j = nz[0]
        if j <= last_pivot or row[j] <= 0:
            return False
        for k in range(i):
            if not 0 <= H[k][j] < row[j]:
                return False
        last_pivot = j
    return True


def lattice_basis(generators, ncols=None):
    """HNF basis (nonzero rows only) of the integer row span of generators.

    Rows are inserted one at a time into an echelon basis kept fully
    reduced, which keeps entries bounded by the pivots for full-rank input.
    """
    gens = [list(g) for g in generators]
    if ncols is None:
        ncols = len(gens[0]) if gens else 0
    basis = {}
    for v in gens:
        v = list(v)
        for c in range(ncols):
            if v[c] == 0:
                continue
            row = basis.get(c)
            if row is None:
                if v[c] < 0:
                    v = [-x for x in v]
                basis[c] = v
                break
            g, x, y = xgcd(row[c], v[c])
            a, b = row[c] // g, v[c] // g
            new_row = [x * r_ + y * v_ for r_, v_ in zip(row, v)]
            v = [a * v_ - b * r_ for r_, v_ in zip(row, v)]
            basis[c] = new_row
        _reduce_basis(basis)
    return tuple(tuple(basis[c]) for c in sorted(basis))


def _reduce_basis(basis):
    # left to right: subtracting the row of pivot c only touches columns >= c
    cols = sorted(basis)
    for idx, c2 in enumerate(cols):
        for c in cols[idx + 1:]:
            q = basis[c2][c] // basis[c][c]
            if q:
                basis[c2] = [a - q * b for a, b in zip(basis[c2], basis[c])]


@dataclass(frozen=True)
class SNFResult:
    S: tuple
    P: tuple
    Q: tuple

    @property
    def diagonal(self):
        """Nonzero invariant factors s_1 | s_2 | ... in order."""
        m, n = shape(self.S)
        return tuple(self.S[i][i] for i in range(min(m, n)) if self.S[i][i] != 0)

    @property
    def rank(self):
        return len(self.diagonal)


def snf(M):
    """Smith normal form: returns SNFResult with P*M*Q = S.

    The pivot at each stage is the entry of least absolute value in the
    remaining block, ties broken by (row, col), so transforms are
    reproducible.
    """
    M = as_matrix(M)
    m, n = shape(M)
    A = [list(r) for r in M]
    P = [list(r) for r in identity(m)]
    Qt = [list(r) for r in identity(n)]  # columns of Q stored as rows

    def col_axpy(dst, src, q):
        if q:
            for row in A:
                row[dst] -= q * row[src]
            _row_axpy(Qt, dst, src, q)

    def swap_cols(a, b):
        if a != b:
            for row in A:
                row[a], row[b] = row[b], row[a]
            Qt[a], Qt[b] = Qt[b], Qt[a]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = A[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            break
        _, i0, j0 = best
        if i0 != t:
            A[t], A[i0] = A[i0], A[t]
            P[t], P[i0] = P[i0], P[t]
        swap_cols(t, j0)
        p = A[t][t]
        clean = True
        for i in range(t + 1, m):
            if A[i][t]:
                q = A[i][t] // p
                _row_axpy(A, i, t, q)
                _row_axpy(P, i, t, q)
                clean = clean and A[i][t] == 0
        for j in range(t + 1, n):
            if A[t][j]:
                col_axpy(j, t, A[t][j] // p)
                clean = clean and A[t][j] == 0
        if not clean:
            continue
        bad = next(
            (i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p),
            None,
        )
        if bad is not None:
            A[t] = [a + b for a, b in zip(A[t], A[bad])]
            P[t] = [a + b for a, b in zip(P[t], P[bad])]
            continue
        if p < 0:
            A[t] = [-x for x in A[t]]
            P[t] = [-x for x in P[t]]
        t += 1
    Q = tuple(zip(*Qt)) if n else ()
    return SNFResult(S=as_matrix(A), P=as_matrix(P), Q=as_matrix(Q))


def solve_integer(M, b):
    """Integral solution x of M x = b, or None if there is none."""
    M = as_matrix(M)
    m, n = shape(M)
    if len(b) != m:
        raise ValueError(f"right-hand side has length {len(b)}, expected {m}")
    res = snf(M)
    Pb = matvec(res.P, b)
    y = [0] * n
    for i in range(m):
        s = res.S[i][i] if i < n else 0
        if s == 0:
            if Pb[i] != 0:
                return None
        else:
            if Pb[i] % s:
                return None
            y[i] = Pb[i] // s
    return matvec(res.Q, y)
