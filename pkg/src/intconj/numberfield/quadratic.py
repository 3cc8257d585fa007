"""Ideal classes of quadratic orders.

Principality is decided through the norm form of the ideal.  If I has basis
(e1, e2) and norm Nrm = [O : I], the binary form

    q(x, y) = N(x e1 + y e2) / Nrm

is integral of discriminant disc(O), and I is principal iff q represents +1
or -1 (an element of I of norm +-Nrm generates a sublattice of I with the
same index, hence all of I).  Definite forms are settled by enumerating the
ellipsoid q <= 1; indefinite forms by walking the cycle of reduced forms.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from ..exactmath.enumeration import enumerate_short
from ..exactmath.poly import IntPoly, discriminant
from .algebra import NumberField
from .module import Order, ZModule, colon, module_norm
from .verdicts import Found, NotPrincipal


def _require_quadratic(K):
    if not isinstance(K, NumberField) or K.degree != 2:
        raise ValueError("quadratic number field required")


def conjugate(x):
    """Galois conjugate of an element of a quadratic field."""
    return x.trace() - x


def norm_form(I, O=None):
    """Coefficients (a, b, c) of N(x e1 + y e2) / [O : I] on the HNF basis of I."""
    _require_quadratic(I.algebra)
    O = O if O is not None else Order.from_module(colon(I, I))
    nrm = module_norm(I, O)
    e1, e2 = I.elements()
    a = e1.norm() / nrm
    b = (e1 * conjugate(e2)).trace() / nrm
    c = e2.norm() / nrm
    return tuple(Fraction(v) for v in (a, b, c))


def _as_ints(form):
    a, b, c = form
    if any(Fraction(v).denominator != 1 for v in form):
        raise ValueError(f"norm form {form} is not integral; ideal is not invertible")
    return int(a), int(b), int(c)


# --- indefinite forms ------------------------------------------------------

def _lt_sqrt(s, D):
    """s < sqrt(D) for integer s and non-square D > 0."""
    return s < 0 or s * s < D


def _gt_sqrt(t, D):
    return t > 0 and t * t > D


def is_reduced_indefinite(form, D):
    a, b, _ = form
    if not (b > 0 and b * b < D):
        return False
    # |sqrt(D) - 2|a|| < b  <=>  2|a| - b < sqrt(D) < 2|a| + b
    return _lt_sqrt(2 * abs(a) - b, D) and _gt_sqrt(2 * abs(a) + b, D)


def rho(form, D):
    """One reduction step and its substitution matrix [[0, -1], [1, t]]."""
    a, b, c = form
    m = 2 * abs(c)
    r0 = (-b) % m
    if _gt_sqrt(abs(c), D):
        r = r0 if r0 <= abs(c) else r0 - m
    else:
        s = isqrt(D)
        r = r0 + ((s - r0) // m) * m
    t = (r + b) // (2 * c)
    new = (c, r, (r * r - D) // (4 * c))
    return new, ((0, -1), (1, t))


def _mat2(X, Y):
    return (
        (X[0][0] * Y[0][0] + X[0][1] * Y[1][0], X[0][0] * Y[0][1] + X[0][1] * Y[1][1]),
        (X[1][0] * Y[0][0] + X[1][1] * Y[1][0], X[1][0] * Y[0][1] + X[1][1] * Y[1][1]),
    )


def reduction_cycle(form, D):
    """Reduce an indefinite form and return its full cycle.

    Returns a list of (form, M) where M in SL2(Z) satisfies q o M = form.
    """
    M = ((1, 0), (0, 1))
    f = form
    steps = 0
    while not is_reduced_indefinite(f, D):
        f, S = rho(f, D)
        M = _mat2(M, S)
        steps += 1
        if steps > 10_000 + 4 * isqrt(D):
            raise RuntimeError("form reduction did not terminate")
    cycle = [(f, M)]
    start = f
    while True:
        f, S = rho(f, D)
        M = _mat2(M, S)
        if f == start:
            return cycle
        cycle.append((f, M))


def _is_square(n):
    return n >= 0 and isqrt(n) ** 2 == n


def is_principal_quadratic(I, O):
    """Rigorously decide whether I = gamma * O.

    O must be the multiplicator ring of I.
    """
    K = I.algebra
    _require_quadratic(K)
    if colon(I, I) != O:
        raise ValueError("O is not the multiplicator ring of I")
    a, b, c = _as_ints(norm_form(I, O))
    D = b * b - 4 * a * c
    e1, e2 = I.elements()

    def check(x, y):
        g = e1 * x + e2 * y
        return g if ZModule.from_generators(K, [g * w for w in O.elements()]) == I else None

    if D < 0:
        G = ((Fraction(a), Fraction(b, 2)), (Fraction(b, 2), Fraction(c)))
        minimum = None
        for val, (x, y) in enumerate_short(G, 1):
            if val == 1:
                g = check(x, y)
                if g is not None:
                    return Found(g, {"method": "norm-form-minimum", "form": (a, b, c)})
        for val, _ in enumerate_short(G, max(a, c)):
            minimum = val
            break
        return NotPrincipal({
            "method": "norm-form-minimum",
            "form": (a, b, c),
            "discriminant": D,
            "minimum": int(minimum),
        })
    if _is_square(D):
        raise ValueError("split quadratic algebra is not supported")
    cycle = reduction_cycle((a, b, c), D)
    for f, M in cycle:
        if abs(f[0]) == 1:
            g = check(M[0][0], M[1][0])
            if g is None:
                raise AssertionError("reduced form with a = +-1 did not give a generator")
            return Found(g, {"method": "reduction-cycle", "form": (a, b, c)})
    return NotPrincipal({
        "method": "reduction-cycle",
        "form": (a, b, c),
        "discriminant": D,
        "cycle": [f for f, _ in cycle],
    })


def are_equivalent(I, J, O):
    """I ~ J for invertible ideals with multiplicator ring O."""
    return is_principal_quadratic(colon(I, J), O).principal


# --- orders and their ideals ----------------------------------------------

def fundamental_discriminant(D):
    """(d_K, conductor) with D = conductor^2 * d_K."""
    from sympy import factorint

    if D in (0, 1) or _is_square(D):
        raise ValueError(f"{D} is a square")
    sign = -1 if D < 0 else 1
    core, cond = sign, 1
    for p, e in factorint(abs(D)).items():
        core *= p ** (e % 2)
        cond *= p ** (e // 2)
    if core % 4 != 1:
        core *= 4
        cond //= 2
    return core, cond


def maximal_order_generator(K):
    """omega with O_K = Z + omega Z for a quadratic field K = Q[x]/(x^2 + b x + c)."""
    _require_quadratic(K)
    b = K.poly[1]
    D = discriminant(K.poly)
    dK, cond = fundamental_discriminant(D)
    sqrt_dK = (K.gen() * 2 + b) / cond
    return (sqrt_dK + dK) / 2


def quadratic_integral_basis(poly):
    """Rows of the ring of integers of Q[x]/(poly) in the power basis."""
    K = NumberField(poly if isinstance(poly, IntPoly) else IntPoly(poly))
    w = maximal_order_generator(K)
    return [K.one(), w.coords]


def order_of_conductor(K, k):
    """Z + k * omega_K."""
    w = maximal_order_generator(K)
    return Order.from_generators(K, [K.elem(K.one()), w * k])


def overorders(O):
    """All orders containing O, from largest conductor to the maximal order."""
    K = O.algebra
    _require_quadratic(K)
    dK, _ = fundamental_discriminant(discriminant(K.poly))
    f2 = Fraction(O.discriminant()) / dK
    f = isqrt(int(f2))
    from sympy import divisors

    out = [order_of_conductor(K, k) for k in sorted(divisors(f), reverse=True)]
    return [R for R in out if O.issubset(R)]


def _class_bound(D):
    if D < 0:
        return isqrt(-D // 3)
    return isqrt(D)


def ideals_of_norm(O, N):
    """All O-ideals I inside O with [O : I] = N, ordered by their HNF in the O-basis."""
    K = O.algebra
    w1, w2 = O.elements()
    out = []
    for a in range(1, N + 1):
        if N % a:
            continue
        d = N // a
        for b in range(d):
            gens = [w1 * a + w2 * b, w2 * d]
            I = ZModule.from_generators(K, gens)
            if I.is_module_over(O):
                out.append(((a, b, d), I))
    return out


def class_reps_quadratic(O):
    """One ideal per class of invertible ideals with multiplicator ring exactly O."""
    K = O.algebra
    _require_quadratic(K)
    D = O.discriminant()
    reps = []
    for N in range(1, max(_class_bound(D), 1) + 1):
        for _, I in ideals_of_norm(O, N):
            if colon(I, I) != O:
                continue
            if any(are_equivalent(I, J, O) for J in reps):
                continue
            reps.append(I)
    return reps


def class_number(O):
    return len(class_reps_quadratic(O))


__all__ = [
    "are_equivalent",
    "class_number",
    "class_reps_quadratic",
    "conjugate",
    "fundamental_discriminant",
    "ideals_of_norm",
    "is_principal_quadratic",
    "is_reduced_indefinite",
    "maximal_order_generator",
    "norm_form",
    "order_of_conductor",
    "overorders",
    "quadratic_integral_basis",
    "reduction_cycle",
    "rho",
]
