"""Short-vector enumeration for positive definite rational quadratic forms.

The Gram matrix is LLL-reduced first (exactly, over Q), then a
Fincke-Pohst depth-first search lists every vector of the reduced lattice
inside the ellipsoid.  Vectors come out one shell at a time so a caller
looking for the first vector with some property can stop early without
paying for the whole ball.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .linalg import as_matrix, identity, is_square, vecmat


class NotPositiveDefinite(ValueError):
    pass


@dataclass(frozen=True)
class QuadForm:
    gram: tuple

    def __post_init__(self):
        G = as_matrix(self.gram)
        if not is_square(G):
            raise ValueError("Gram matrix must be square")
        n = len(G)
        for i in range(n):
            for j in range(i + 1, n):
                if Fraction(G[i][j]) != Fraction(G[j][i]):
                    raise ValueError("Gram matrix must be symmetric")
        object.__setattr__(self, "gram", G)

    @property
    def rank(self):
        return len(self.gram)

    def __call__(self, v):
        G = self.gram
        return sum(v[i] * G[i][j] * v[j] for i in range(len(v)) for j in range(len(v)) if v[i] and v[j])


def _gso(G):
    """Gram-Schmidt data (mu, Bstar) from a Gram matrix."""
    n = len(G)
    mu = [[Fraction(0)] * n for _ in range(n)]
    B = [Fraction(0)] * n
    for i in range(n):
        for j in range(i):
            s = Fraction(G[i][j])
            for k in range(j):
                s -= mu[j][k] * mu[i][k] * B[k]
            mu[i][j] = s / B[j]
        s = Fraction(G[i][i])
        for k in range(i):
            s -= mu[i][k] * mu[i][k] * B[k]
        if s <= 0:
            raise NotPositiveDefinite("Gram matrix is not positive definite")
        B[i] = s
    return mu, B


def lll_gram(gram, delta=Fraction(99, 100)):
    """LLL reduction of a Gram matrix.

    Returns (U, G2) with U unimodular (rows express the new basis in the old
    one) and G2 = U G U^T.
    """
    G = [[Fraction(x) for x in row] for row in gram]
    n = len(G)
    U = [list(r) for r in identity(n)]
    if n == 0:
        return (), ()
    mu, B = _gso(G)
    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            q = round(mu[k][j])
            if q:
                U[k] = [a - q * b for a, b in zip(U[k], U[j])]
                _sub_row_col(G, k, j, q)
                for i in range(j):
                    mu[k][i] -= q * mu[j][i]
                mu[k][j] -= q
        if B[k] >= (delta - mu[k][k - 1] ** 2) * B[k - 1]:
            k += 1
        else:
            U[k], U[k - 1] = U[k - 1], U[k]
            G[k], G[k - 1] = G[k - 1], G[k]
            for row in G:
                row[k], row[k - 1] = row[k - 1], row[k]
            mu, B = _gso(G)
            k = max(k - 1, 1)
    G2 = tuple(tuple(int(x) if x.denominator == 1 else x for x in row) for row in G)
    return as_matrix(U), G2


def _sub_row_col(G, k, j, q):
    """Apply b_k <- b_k - q b_j to the Gram matrix in place."""
    n = len(G)
    gkk = G[k][k] - 2 * q * G[k][j] + q * q * G[j][j]
    for t in range(n):
        if t != k:
            G[k][t] -= q * G[j][t]
            G[t][k] = G[k][t]
    G[k][k] = gkk


def _decompose(G):
    """Return (diag, upper) with x^T G x = sum_i diag_i (x_i + sum_{j>i} upper_ij x_j)^2."""
    n = len(G)
    mu, B = _gso(G)
    # x^T G x with G = L D L^T, L = mu + I (lower).  Column form:
    # sum_i B_i (x_i + sum_{j>i} mu[j][i] x_j)^2
    upper = [[mu[j][i] if j > i else Fraction(0) for j in range(n)] for i in range(n)]
    return B, upper


def _floor_sqrt(t):
    r = math.isqrt(t.numerator // t.denominator)
    while Fraction((r + 1) ** 2) <= t:
        r += 1
    while Fraction(r * r) > t:
        r -= 1
    return r


def _range_for(center, budget, q):
    """Integers x with q*(x - center)^2 <= budget."""
    t = budget / q
    lo = math.floor(center) - _floor_sqrt(t) - 1
    hi = math.ceil(center) + _floor_sqrt(t) + 1
    while q * (lo - center) ** 2 > budget and lo <= hi:
        lo += 1
    while q * (hi - center) ** 2 > budget and hi >= lo:
        hi -= 1
    return lo, hi


def _fincke_pohst(diag, upper, bound):
    """All nonzero x (one of each +-pair) with form(x) <= bound, in the reduced basis."""
    n = len(diag)
    out = []
    x = [0] * n

    def rec(i, budget, all_zero_above):
        center = -sum(upper[i][j] * x[j] for j in range(i + 1, n))
        lo, hi = _range_for(center, budget, diag[i])
        if all_zero_above:
            lo = max(lo, 0)
        for v in range(lo, hi + 1):
            x[i] = v
            rem = budget - diag[i] * (v - center) ** 2
            if i == 0:
                if any(x):
                    out.append((bound - rem, tuple(x)))
            else:
                rec(i - 1, rem, all_zero_above and v == 0)
        x[i] = 0

    if n:
        rec(n - 1, Fraction(bound), True)
    return out


def _canonical_sign(v):
    for c in v:
        if c:
            return v if c > 0 else tuple(-a for a in v)
    return v


def enumerate_short(Q, bound, start=None):
    """Yield (norm, v) for every nonzero v with v^T Q v <= bound.

    Each +-pair appears once (first nonzero coordinate positive).  Output is
    sorted by (norm, v).  Internally the ball is explored in doubling shells
    beginning at ``start`` (default: the smallest diagonal entry of the
    reduced form), so the first hits arrive cheaply.
    """
    if not isinstance(Q, QuadForm):
        Q = QuadForm(Q)
    bound = Fraction(bound)
    n = Q.rank
    U, G = lll_gram(Q.gram)
    diag, upper = _decompose(G)
    if start is None:
        start = min(Fraction(G[i][i]) for i in range(n)) if n else bound
    lo = Fraction(-1)
    hi = min(Fraction(start), bound)
    while True:
        shell = []
        for norm, x in _fincke_pohst(diag, upper, hi):
            if norm > lo:
                v = _canonical_sign(vecmat(x, U))
                shell.append((norm, v))
        shell.sort()
        yield from shell
        if hi >= bound:
            return
        lo = hi
        hi = min(hi * 2, bound)


def short_vectors(Q, bound):
    return [v for _, v in enumerate_short(Q, bound)]


def _fincke_pohst_float(diag, upper, bound, tol, chunk):
    """Float Fincke-Pohst, streamed as (norms, X) arrays of about ``chunk``
    rows in depth-first order.  Every x with form(x) <= bound is produced
    (the per-level budget carries ``tol``); one of each +-pair."""
    n = len(diag)
    if not n:
        return
    x = [0] * n
    pending = []
    size = 0
    # explicit stack of (level, used, all_zero_above, next value, last value, center)
    stack = []

    def push(i, used, all_zero_above):
        center = -sum(upper[i][j] * x[j] for j in range(i + 1, n))
        r = math.sqrt(max(bound - used + tol, 0.0) / diag[i])
        lo, hi = math.ceil(center - r), math.floor(center + r)
        if all_zero_above:
            lo = max(lo, 0 if i else 1)
        if lo > hi:
            return None
        if i == 0:
            xs = np.arange(lo, hi + 1, dtype=np.int64)
            norms = used + diag[0] * (xs - center) ** 2
            block = np.zeros((len(xs), n), dtype=np.int64)
            block[:, 0] = xs
            block[:, 1:] = x[1:]
            return norms, block
        stack.append([i, used, all_zero_above, lo, hi, center])
        return None

    def flush():
        out = (np.concatenate([b[0] for b in pending]), np.concatenate([b[1] for b in pending]))
        pending.clear()
        return out

    first = push(n - 1, 0.0, True)
    if first is not None:
        yield first
        return
    while stack:
        frame = stack[-1]
        i, used, zero, v, hi, center = frame
        if v > hi:
            x[i] = 0
            stack.pop()
            continue
        frame[3] = v + 1
        x[i] = v
        got = push(i - 1, used + diag[i] * (v - center) ** 2, zero and v == 0)
        if got is not None:
            pending.append(got)
            size += len(got[0])
            if size >= chunk:
                size = 0
                yield flush()
    if pending:
        yield flush()


def enumerate_shells_float(Q, bound, start=None, rel_tol=1e-9, chunk=1 << 16):
    """Floating-point companion of ``enumerate_short`` for large searches.

    Yields (norms, V) chunks: V an integer array of vectors (one of each
    +-pair), norms their float values.  Shells double from ``start`` up to
    ``bound``; all chunks of one shell precede the next, and inside a shell
    the order is the (deterministic) depth-first order.  The budget at every
    level is widened by rel_tol * bound, so the shells together contain
    every vector with exact norm <= bound, plus possibly a few just outside.
    Callers must confirm hits exactly.
    """
    if not isinstance(Q, QuadForm):
        Q = QuadForm(Q)
    bound = Fraction(bound)
    n = Q.rank
    U, G = lll_gram(Q.gram)
    d, up = _decompose(G)
    diag = [float(t) for t in d]
    upper = [[float(t) for t in row] for row in up]
    Um = np.array(U, dtype=object)
    umax = max((abs(c) for row in U for c in row), default=1)
    if start is None:
        start = min(Fraction(G[i][i]) for i in range(n)) if n else bound
    lo = -1.0
    hi = min(Fraction(start), bound)
    tol = rel_tol * float(bound) + 1e-12
    while True:
        last = hi >= bound
        for norms, X in _fincke_pohst_float(diag, upper, float(hi), tol, chunk):
            keep = norms > lo if last else (norms > lo) & (norms <= float(hi))
            if keep.any():
                yield norms[keep], _to_original(X[keep], Um, umax)
        if last:
            return
        lo = float(hi)
        hi = min(hi * 2, bound)


def _to_original(X, Um, umax):
    """Rows of X times U, each with its first nonzero entry made positive."""
    n = Um.shape[0]
    xmax = int(np.abs(X).max()) if X.size else 0
    if xmax * umax * n < 2**62:
        V = X @ Um.astype(np.int64)
    else:
        V = X.astype(object).dot(Um)
    nz = V != 0
    first = nz.argmax(axis=1)
    lead = V[np.arange(len(V)), first]
    sign = np.where(lead < 0, -1, 1)
    return V * sign[:, None]
