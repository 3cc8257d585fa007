"""Non-principality of O_F (x) I when f = (y - a1)(y - a2) splits over F.

O_F (x) I sits in F x F.  It is principal iff some (g1, g2) generates it.
When both components I_k = sum v_i(a_k) O_F share a generator gamma, every
candidate is (gamma, gamma u) with u a unit, and (gamma, gamma u) lies in
O_F (x) I iff the integer systems

    sum_i v_i(a1) r_i = gamma          sum_i v_i(a1) r'_i = gamma a1
    sum_i v_i(a2) r_i = gamma u        sum_i v_i(a2) r'_i = gamma u a2

are solvable.  Subtracting the rows of the first system shows that
sum_i (v_i(a1) - v_i(a2)) r_i = gamma (1 - u); through the Smith form
P (M_d1 | ... | M_dn) Q = S of that difference matrix, 1 - u must lie in
the condition lattice {x : (P M_gamma x)_i = 0 mod s_i}.  When that
lattice is a line k w the unit equation N(1 + k w) = +-1 leaves finitely
many k, and each is settled by solving the full systems exactly.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from ..exactmath.linalg import det, hstack, inverse, matmul, vecmat, vstack
from ..exactmath.normal_forms import lattice_basis, snf, solve_integer
from ..exactmath.poly import IntPoly, integer_roots
from ..numberfield.extension import (
    DEFAULT_BOUND_FACTOR,
    DEFAULT_PRECISION,
    find_generator,
    mult_matrix_in_basis,
    root_in,
    search_bound,
)
from ..numberfield.module import ZModule, module_norm
from ..numberfield.verdicts import NotFoundWithinBound, NotPrincipal
from .certificate import ObstructionTranscript
from .exttest import _order_of


def _eval_at(x, root):
    """Element x of K = Q[y]/(f), written in powers of y, evaluated at a root in F."""
    F = root.algebra
    acc = F.elem([0] * F.dim)
    power = F.elem(F.one())
    for c in x.coords:
        acc = acc + power * c
        power = power * root
    return acc


def _int_matrix(M):
    out = tuple(tuple(Fraction(x) for x in row) for row in M)
    if any(x.denominator != 1 for row in out for x in row):
        raise ValueError("multiplication matrix is not integral in the O_F basis")
    return tuple(tuple(int(x) for x in row) for row in out)


def _coords(x, basis):
    Binv = inverse([b.coords for b in basis])
    return tuple(vecmat(x.coords, Binv))


def _int_coords(x, basis):
    c = _coords(x, basis)
    if any(Fraction(t).denominator != 1 for t in c):
        return None
    return tuple(int(t) for t in c)


def shared_generator(I1, I2, OF, bound_factor=DEFAULT_BOUND_FACTOR, precision=DEFAULT_PRECISION):
    """Shortest gamma (by T2) with gamma O_F = I1 = I2, or None."""
    if I1 != I2:
        return None
    nrm = module_norm(I1, OF)
    bound = search_bound(bound_factor, OF.algebra.dim, nrm)
    gamma, _, _ = find_generator(I1, OF, nrm, bound, precision)
    return gamma


def condition_lattice(N, diagonal, m):
    """{x in Z^m : (N x)_i = 0 mod s_i for i < r, (N x)_i = 0 beyond r}."""
    r = len(diagonal)
    rows = []
    for i in range(len(N)):
        extra = [0] * r
        if i < r:
            extra[i] = -diagonal[i]
        rows.append(list(N[i]) + extra)
    res = snf(rows)
    total = m + r
    kernel = [tuple(res.Q[i][j] for i in range(total)) for j in range(res.rank, total)]
    return lattice_basis([k[:m] for k in kernel], m)


def norm_polynomial(w):
    """Integer polynomial k -> N(1 + k w), by exact interpolation at k = 0..m."""
    F = w.algebra
    m = F.dim
    xs = list(range(m + 1))
    ys = [Fraction((1 + w * k).norm()) for k in xs]
    coeffs = [Fraction(0)] * (m + 1)
    for j, (xj, yj) in enumerate(zip(xs, ys)):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for t, xt in enumerate(xs):
            if t == j:
                continue
            basis = [Fraction(0)] + basis
            for i in range(len(basis) - 1):
                basis[i] -= xt * basis[i + 1]
            denom *= xj - xt
        for i, b in enumerate(basis):
            coeffs[i] += yj * b / denom
    if any(c.denominator != 1 for c in coeffs):
        raise AssertionError("norm polynomial is not integral")
    return IntPoly([int(c) for c in coeffs])


def unit_parameters(poly):
    """Integers k with poly(k) = +1 or -1."""
    return tuple(sorted(set(integer_roots(poly - 1)) | set(integer_roots(poly + 1))))


def residual_systems(v1, v2, gamma, u, a1, a2, basis):
    """Solvability of the two integer systems for the candidate (gamma, gamma u)."""
    M1 = hstack(*[_int_matrix(mult_matrix_in_basis(x, basis)) for x in v1])
    M2 = hstack(*[_int_matrix(mult_matrix_in_basis(x, basis)) for x in v2])
    M = vstack(M1, M2)
    out = {}
    for name, (t1, t2) in {
        "generator": (gamma, gamma * u),
        "generator_times_alpha": (gamma * a1, gamma * u * a2),
    }.items():
        c1, c2 = _int_coords(t1, basis), _int_coords(t2, basis)
        if c1 is None or c2 is None:
            out[name] = False
            continue
        out[name] = solve_integer(M, list(c1) + list(c2)) is not None
    out["solvable"] = out["generator"] and out["generator_times_alpha"]
    return out


def _canonical(w):
    for c in w:
        if c:
            return w if c > 0 else tuple(-x for x in w)
    return w


def split_obstruction(I, entry, basis=None, direction=None,
                      bound_factor=DEFAULT_BOUND_FACTOR, precision=DEFAULT_PRECISION):
    """Try to prove that O_F (x) I is not principal when f splits over F.

    ``basis`` is the Z-basis (v_i) of I (default: its triangular basis).
    ``direction`` optionally names a vector w in O_F coordinates; the line
    u = 1 + k w is then analysed and recorded, but it only decides the
    verdict when it is the whole condition lattice.
    """
    K = I.algebra
    f = K.poly
    if f.degree != 2:
        raise ValueError("split obstruction is implemented for quadratic f")
    OF = _order_of(entry)
    F = OF.algebra
    a1 = root_in(f, OF, precision)
    if a1 is None:
        raise ValueError(f"{f.format()} does not split over {F.name}")
    a2 = -a1 - f[1]
    v = list(basis) if basis is not None else I.triangular_basis()
    # a fractional ideal is replaced by an integral multiple in its class
    scale = 1
    for x in v:
        for c in x.coords:
            scale = lcm(scale, Fraction(c).denominator)
    v = [x * scale for x in v]
    v1 = [_eval_at(x, a1) for x in v]
    v2 = [_eval_at(x, a2) for x in v]
    OB = OF.elements()
    I1 = ZModule.from_generators(F, [x * b for x in v1 for b in OB])
    I2 = ZModule.from_generators(F, [x * b for x in v2 for b in OB])
    gamma = shared_generator(I1, I2, OF, bound_factor, precision)
    if gamma is None:
        return NotFoundWithinBound(bound_factor, {"reason": "no shared generator of the components found"})
    m = F.dim
    Dmat = hstack(*[_int_matrix(mult_matrix_in_basis(x - y, OB)) for x, y in zip(v1, v2)])
    res = snf(Dmat)
    diag = res.diagonal
    Mg = _int_matrix(mult_matrix_in_basis(gamma, OB))
    lam = condition_lattice(matmul(res.P, Mg), diag, m)
    gamma_coords = _int_coords(gamma, OB)
    one = F.elem(F.one())

    def elem(w):
        return sum((b * c for b, c in zip(OB, w)), F.elem([0] * m))

    def line(w):
        poly = norm_polynomial(elem(w))
        ks = unit_parameters(poly)
        resid = {k: residual_systems(v1, v2, gamma, one + elem(w) * k, a1, a2, OB) for k in ks}
        return poly, ks, resid

    notes = {
        "root": [str(c) for c in a1.coords],
        "condition_lattice_rank": len(lam),
        "condition_lattice_index": _index(lam, m),
    }
    if scale != 1:
        notes["scaled_by"] = scale
    if len(lam) == 1:
        w = _canonical(lam[0])
        poly, ks, resid = line(w)
        transcript = ObstructionTranscript(
            diag, w, tuple(poly.coeffs), ks, resid, tuple(lam), gamma_coords, notes,
        )
        if all(not r["solvable"] for r in resid.values()):
            return NotPrincipal({"obstruction": transcript})
        return NotFoundWithinBound(bound_factor, {"reason": "a unit candidate solves the residual system", "obstruction": transcript})
    resid = {0: residual_systems(v1, v2, gamma, one, a1, a2, OB)}
    w, poly, ks = None, None, ()
    if direction is not None:
        w = tuple(int(c) for c in direction)
        poly, ks, line_resid = line(w)
        resid.update(line_resid)
        notes["direction_in_condition_lattice"] = _in_lattice(w, lam)
        notes["direction_source"] = "supplied"
    transcript = ObstructionTranscript(
        diag, w, tuple(poly.coeffs) if poly is not None else None, ks, resid, tuple(lam), gamma_coords, notes,
    )
    return NotFoundWithinBound(bound_factor, {
        "reason": f"condition lattice has rank {len(lam)}; only rank 1 is decided",
        "obstruction": transcript,
    })


def _index(lam, m):
    if len(lam) != m:
        return None
    return abs(det(lam))


def _in_lattice(w, lam):
    return solve_integer(tuple(zip(*lam)), list(w)) is not None
