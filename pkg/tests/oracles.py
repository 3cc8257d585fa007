"""Independent reference computations shared by the tests."""

import itertools
from math import gcd


def reduced_form_count(D):
    """h(D) for D < 0: primitive reduced forms |b| <= a <= c, b >= 0 if |b| = a or a = c."""
    h = 0
    a = 1
    while 3 * a * a <= -D:
        for b in range(-a + 1, a + 1):
            if (b * b - D) % (4 * a):
                continue
            c = (b * b - D) // (4 * a)
            if c < a or (a == c and b < 0):
                continue
            if gcd(gcd(a, abs(b)), c) == 1:
                h += 1
        a += 1
    return h


def laplace_det(M):
    if not M:
        return 1
    return sum((-1) ** j * M[0][j] * laplace_det([r[:j] + r[j + 1:] for r in M[1:]]) for j in range(len(M)))


def determinantal_divisors(M):
    m, n = len(M), len(M[0])
    out = []
    for k in range(1, min(m, n) + 1):
        g = 0
        for rows in itertools.combinations(range(m), k):
            for cols in itertools.combinations(range(n), k):
                g = gcd(g, laplace_det([[M[i][j] for j in cols] for i in rows]))
        if g == 0:
            break
        out.append(g)
    return out
