import itertools
import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from intconj.exactmath.enumeration import (
    NotPositiveDefinite,
    QuadForm,
    enumerate_shells_float,
    enumerate_short,
    lll_gram,
    short_vectors,
)
from intconj.exactmath.linalg import (
    char_poly,
    commutator_matrix,
    det,
    identity,
    inverse,
    kernel_rational,
    matmul,
    matvec,
    rank,
    solve_rational,
    transpose,
    unvec,
    vec,
)
from intconj.exactmath.normal_forms import hnf, is_hnf, lattice_basis, snf, solve_integer, xgcd
from intconj.exactmath.poly import IntPoly, discriminant, integer_roots, is_squarefree, poly_gcd, resultant
from oracles import determinantal_divisors, laplace_det


def int_matrices(min_rows=1, max_rows=4, min_cols=1, max_cols=4, lo=-9, hi=9):
    return st.tuples(st.integers(min_rows, max_rows), st.integers(min_cols, max_cols)).flatmap(
        lambda rc: st.lists(
            st.lists(st.integers(lo, hi), min_size=rc[1], max_size=rc[1]), min_size=rc[0], max_size=rc[0]
        )
    )


def square_matrices(n_lo=1, n_hi=4, lo=-9, hi=9):
    return st.integers(n_lo, n_hi).flatmap(
        lambda n: st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n)
    )


# --- linear algebra --------------------------------------------------------

@given(square_matrices())
def test_det_matches_laplace(M):
    assert det(M) == laplace_det(M)


@given(square_matrices(n_hi=3, lo=-5, hi=5))
def test_inverse_and_solve(M):
    if det(M) == 0:
        assert rank(M) < len(M)
        assert kernel_rational(M)
        return
    Mi = inverse(M)
    assert matmul(M, Mi) == identity(len(M))
    b = list(range(1, len(M) + 1))
    assert list(matvec(M, solve_rational(M, b))) == b


@given(square_matrices(n_hi=4, lo=-6, hi=6))
def test_char_poly_matches_sympy(M):
    expected = sympy.Matrix(M).charpoly().all_coeffs()[::-1]
    assert list(char_poly(M).coeffs) == [int(c) for c in expected]


def test_commutator_matrix_acts_on_vec():
    A = [[0, 1], [-5, 0]]
    B = [[-1, 2], [-3, 1]]
    X = [[1, 2], [3, 4]]
    T = commutator_matrix(A, B)
    lhs = unvec(list(matvec(T, vec(X))), 2)
    AX, XB = matmul(A, X), matmul(X, B)
    assert [list(r) for r in lhs] == [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(AX, XB)]


# --- normal forms ----------------------------------------------------------

@settings(max_examples=100)
@given(int_matrices())
def test_snf_matches_determinantal_divisors(M):
    res = snf(M)
    d = determinantal_divisors(M)
    expected = [d[0]] + [d[k] // d[k - 1] for k in range(1, len(d))] if d else []
    assert list(res.diagonal) == expected
    assert matmul(matmul(res.P, M), res.Q) == res.S
    assert abs(det(res.P)) == 1 and abs(det(res.Q)) == 1
    for a, b in zip(res.diagonal, res.diagonal[1:]):
        assert b % a == 0


@given(int_matrices())
def test_hnf_is_canonical(M):
    H, U = hnf(M)
    assert abs(det(U)) == 1
    assert matmul(U, M) == H
    assert is_hnf(H)
    assert [list(r) for r in H if any(r)] == [list(r) for r in lattice_basis(M, len(M[0]))]


def test_hnf_known_example():
    H, _ = hnf([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    assert [list(r) for r in H] == [[2, 4, 4], [0, 6, 0], [0, 0, 12]]


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
def test_xgcd(a, b):
    g, x, y = xgcd(a, b)
    assert g == math.gcd(a, b) and a * x + b * y == g


@given(square_matrices(n_hi=3, lo=-6, hi=6), st.lists(st.integers(-20, 20), min_size=3, max_size=3))
def test_solve_integer(M, x):
    x = x[: len(M)]
    b = list(matvec(M, x))
    y = solve_integer(M, b)
    assert y is not None and list(matvec(M, y)) == b


def test_solve_integer_no_solution():
    assert solve_integer([[2, 0], [0, 2]], [1, 0]) is None


# --- polynomials -----------------------------------------------------------

def resultant_oracle(f, g):
    """lc(f)^deg(g) * prod g(r) over the roots r of f, via det g(companion of f)."""
    m = f.degree
    lc = f.coeffs[-1]
    C = sympy.zeros(m, m)
    for i in range(1, m):
        C[i, i - 1] = 1
    for i in range(m):
        C[i, m - 1] = sympy.Rational(-f.coeffs[i], lc)
    gC = sympy.zeros(m, m)
    for k, c in enumerate(g.coeffs):
        gC += c * C ** k
    return sympy.Rational(lc) ** g.degree * gC.det()


@given(st.lists(st.integers(-9, 9), min_size=2, max_size=5), st.lists(st.integers(-9, 9), min_size=2, max_size=5))
def test_resultant_matches_root_product(a, b):
    fa, fb = IntPoly(a), IntPoly(b)
    if fa.degree < 1 or fb.degree < 1:
        return
    assert resultant(fa, fb) == resultant_oracle(fa, fb)


@given(st.integers(-50, 50), st.integers(-50, 50))
def test_quadratic_discriminant(b, c):
    assert discriminant(IntPoly([c, b, 1])) == b * b - 4 * c


def test_poly_helpers():
    f = IntPoly([-6, 1, 1])  # (x + 3)(x - 2)
    assert sorted(integer_roots(f)) == [-3, 2]
    assert is_squarefree(f)
    assert not is_squarefree(IntPoly([1, 2, 1]))
    g = poly_gcd(f, IntPoly([-4, 0, 1]))
    assert g.degree == 1 and g.coeffs[0] / g.coeffs[1] == -2


# --- lattice reduction and enumeration -------------------------------------

def pd_grams(n_lo=1, n_hi=3):
    """B B^T + I for small integer B, always positive definite."""
    return square_matrices(n_lo, n_hi, -4, 4).map(
        lambda B: [[sum(a * b for a, b in zip(r1, r2)) + (1 if i == j else 0) for j, r2 in enumerate(B)]
                   for i, r1 in enumerate(B)]
    )


def box_oracle(G, bound):
    n = len(G)
    Gi = inverse(G)
    radius = [math.isqrt(int(Fraction(bound) * Fraction(Gi[i][i]))) + 1 for i in range(n)]
    Q = QuadForm(G)
    out = set()
    for v in itertools.product(*[range(-r, r + 1) for r in radius]):
        if any(v) and Q(v) <= bound:
            first = next(c for c in v if c)
            out.add(tuple(v) if first > 0 else tuple(-c for c in v))
    return out


@given(pd_grams())
def test_lll_gram_is_congruent(G):
    U, G2 = lll_gram(G)
    assert abs(det(U)) == 1
    assert matmul(matmul(U, G), transpose(U)) == tuple(tuple(Fraction(x) for x in r) for r in G2)


@settings(max_examples=40, deadline=None)
@given(pd_grams(), st.integers(1, 40))
def test_enumerate_short_matches_box(G, bound):
    got = list(enumerate_short(G, bound))
    assert {tuple(v) for _, v in got} == box_oracle(G, bound)
    assert [n for n, _ in got] == sorted(n for n, _ in got)
    Q = QuadForm(G)
    assert all(Q(v) == n for n, v in got)


@settings(max_examples=40, deadline=None)
@given(pd_grams(), st.integers(1, 60))
def test_float_shells_superset_of_exact(G, bound):
    exact = set(short_vectors(G, bound))
    seen = []
    for norms, V in enumerate_shells_float(G, bound, chunk=7):
        seen.extend(tuple(int(c) for c in row) for row in V)
    assert len(seen) == len(set(seen))
    assert exact <= set(seen)
    Q = QuadForm(G)
    assert all(Q(v) <= bound * (1 + Fraction(1, 10**6)) for v in seen)


def test_not_positive_definite():
    with pytest.raises(NotPositiveDefinite):
        list(enumerate_short([[1, 2], [2, 1]], 5))


def test_quadform_rejects_asymmetric():
    with pytest.raises(ValueError):
        QuadForm([[1, 2], [0, 1]])
