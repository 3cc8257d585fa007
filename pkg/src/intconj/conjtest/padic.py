"""Conjugacy over Z_p and local conjugacy.

Let T be the n^2 x n^2 integer matrix of X -> A X - X B and P T Q = S its
Smith form with nonzero diagonal s_1..s_r.  For k' = 1 + max v_p(s_i), a
solution of T(X) = 0 mod p^k' has its first r coordinates in the Q-basis
divisible by p, so T(X)/p lies in the integer image of T and one exact
correction X - p D with T(D) = T(X)/p kills T(X) without changing X mod p.
The solutions mod p of T(X) = 0 mod p^k' are therefore exactly the
reductions of the integer kernel, spanned by the last n^2 - r columns of Q;
searching that span mod p for a matrix with det prime to p decides
Z_p-conjugacy.
"""

from __future__ import annotations

import itertools

from sympy import isprime, primefactors

from ..exactmath.linalg import commutator_matrix, det, identity, matvec, unvec, vec
from ..exactmath.normal_forms import snf, solve_integer
from ..exactmath.poly import discriminant
from .certificate import CONJUGATE, INCONCLUSIVE, NOT_CONJUGATE, ConjCertificate, check_conjugator
from .common import require_irreducible, require_squarefree, shared_char_poly
from .ztest import genus_data

SEARCH_CAP = 10**6


class MethodDisagreement(RuntimeError):
    """The genus test and the per-prime tests gave different answers."""


def valuation(n, p):
    n = abs(int(n))
    if n == 0:
        raise ValueError("valuation of zero")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def artin_rees_exponent(diagonal, p):
    return 1 + max((valuation(s, p) for s in diagonal), default=0)


def lift(T, X, p, n):
    """Exact kernel element congruent to X mod p, via one correction step."""
    TX = matvec(T, vec(X))
    if any(t % p for t in TX):
        raise ValueError("T(X) is not divisible by p")
    D = solve_integer(T, [t // p for t in TX])
    if D is None:
        raise ArithmeticError("T(X)/p is outside the image of T; k' too small")
    return unvec([x - p * d for x, d in zip(vec(X), D)], n)


def test_zp(A, B, p):
    """Decide GL_n(Z_p)-conjugacy, with an integral certificate C' whose
    determinant is prime to p."""
    p = int(p)
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    A, B, f = shared_char_poly(A, B)
    require_squarefree(f)
    ring = {"kind": "Zp", "p": p}
    n = len(A)
    if A == B:
        return ConjCertificate(CONJUGATE, ring, C=identity(n), prime=p, k_prime=1)
    T = commutator_matrix(A, B)
    res = snf(T)
    diag = res.diagonal
    k_prime = artin_rees_exponent(diag, p)
    r = len(diag)
    kernel = [tuple(res.Q[i][j] for i in range(n * n)) for j in range(r, n * n)]
    dim = len(kernel)
    data = {"k_prime": k_prime, "kernel_dim": dim, "snf_diagonal": list(diag), "p_divides_disc": discriminant(f) % p == 0}
    if dim == 0:
        return ConjCertificate(NOT_CONJUGATE, ring, prime=p, k_prime=k_prime, transcript={**data, "reason": "no nonzero intertwiner"})
    if p ** dim > SEARCH_CAP:
        return ConjCertificate(INCONCLUSIVE, ring, prime=p, k_prime=k_prime, transcript={**data, "reason": "search space too large"})
    for coeffs in itertools.product(range(p), repeat=dim):
        if not any(coeffs):
            continue
        X = [sum(c * kv[i] for c, kv in zip(coeffs, kernel)) % p for i in range(n * n)]
        Xm = unvec(X, n)
        if det(Xm) % p == 0:
            continue
        C = lift(T, Xm, p, n)
        checks = check_conjugator(A, B, C, ring)
        if not all(checks.values()):
            raise AssertionError(f"lifted certificate failed: {checks}")
        if any((a - b) % p for a, b in zip(vec(C), X)):
            raise AssertionError("lift changed the matrix mod p")
        return ConjCertificate(CONJUGATE, ring, C=C, prime=p, k_prime=k_prime, transcript={
            **data, "C_mod_p": [list(row) for row in Xm],
        })
    return ConjCertificate(NOT_CONJUGATE, ring, prime=p, k_prime=k_prime, transcript={
        **data, "reason": "every intertwiner mod p is singular", "searched": p ** dim - 1,
    })


def test_local(A, B):
    """Local conjugacy two ways: the genus (multiplicator rings) and Z_p
    tests at every p dividing disc(f).  The two must agree."""
    A, B, f = shared_char_poly(A, B)
    require_irreducible(f)
    primes = primefactors(abs(discriminant(f)))
    parts = tuple(test_zp(A, B, p) for p in primes)
    _, _, OA, OB = genus_data(A, B, f)
    genus_same = OA == OB
    if any(c.verdict == INCONCLUSIVE for c in parts):
        per_prime = None
    else:
        per_prime = all(c.verdict == CONJUGATE for c in parts)
        if per_prime != genus_same:
            raise MethodDisagreement(
                f"genus test says {genus_same}, per-prime tests say {per_prime}"
            )
    if per_prime is None:
        verdict = CONJUGATE if genus_same else NOT_CONJUGATE
    else:
        verdict = CONJUGATE if per_prime else NOT_CONJUGATE
    return ConjCertificate(verdict, {"kind": "local"}, parts=parts, transcript={
        "primes": list(primes),
        "genus_same": genus_same,
        "per_prime": {str(c.prime): c.verdict for c in parts},
    })
