from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import primerange

from intconj import fixtures
from intconj.cfsearch import load_catalog
from intconj.conjtest.certificate import CONJUGATE, INCONCLUSIVE, NOT_CONJUGATE, ConjCertificate, verify_certificate
from intconj.conjtest.exttest import test_ext as ext_conjugacy
from intconj.conjtest.padic import artin_rees_exponent, lift, test_local as local_conjugacy, test_zp as zp_conjugacy, valuation
from intconj.conjtest.split import condition_lattice, norm_polynomial, split_obstruction, unit_parameters
from intconj.conjtest.ztest import test_z as z_conjugacy
from intconj.exactmath.linalg import commutator_matrix, det, matmul
from intconj.exactmath.normal_forms import snf
from intconj.exactmath.poly import IntPoly
from intconj.numberfield.algebra import NumberField
from intconj.numberfield.maximal import maximal_order
from intconj.numberfield.module import ZModule

A5 = [[0, 1], [-5, 0]]
B5 = [[-1, 2], [-3, 1]]


def test_z_rejects_x2p5_pair():
    cert = z_conjugacy(A5, B5)
    assert cert.verdict == NOT_CONJUGATE
    assert cert.transcript["reason"] == "colon ideal is not principal"


def test_z_finds_conjugator():
    U, Ui = [[2, 1], [1, 1]], [[1, -1], [-1, 2]]
    B = [list(r) for r in matmul(matmul(U, A5), Ui)]
    cert = z_conjugacy(A5, B)
    assert cert.verdict == CONJUGATE
    assert matmul(A5, cert.C) == matmul(cert.C, B) and abs(det(cert.C)) == 1
    assert verify_certificate(A5, B, cert)


def test_z_different_genus():
    A, B = [[0, 1], [-20, 0]], [[0, 2], [-10, 0]]
    cert = z_conjugacy(A, B)
    assert cert.verdict == NOT_CONJUGATE and cert.transcript["reason"] == "multiplicator rings differ"
    local = local_conjugacy(A, B)
    assert local.verdict == NOT_CONJUGATE
    assert local.transcript["per_prime"]["2"] == NOT_CONJUGATE


@pytest.mark.parametrize("p", [2, 5])
def test_zp_at_ramified_primes(p):
    cert = zp_conjugacy(A5, B5, p)
    assert cert.verdict == CONJUGATE
    assert matmul(A5, cert.C) == matmul(cert.C, B5)
    assert det(cert.C) % p
    assert verify_certificate(A5, B5, cert)


def test_zp_at_every_small_prime():
    for p in primerange(3, 50):
        if p == 5:
            continue
        cert = zp_conjugacy(A5, B5, p)
        assert cert.verdict == CONJUGATE, p
        assert verify_certificate(A5, B5, cert)


def test_zp_non_conjugate_prime():
    A, B = [[0, 1], [-20, 0]], [[0, 2], [-10, 0]]
    assert zp_conjugacy(A, B, 2).verdict == NOT_CONJUGATE
    assert zp_conjugacy(A, B, 3).verdict == CONJUGATE


def test_zp_rejects_composite():
    with pytest.raises(ValueError):
        zp_conjugacy(A5, B5, 4)


def test_artin_rees_exponent_and_lift():
    T = commutator_matrix(A5, B5)
    diag = snf(T).diagonal
    assert artin_rees_exponent(diag, 2) == 1 + max(valuation(s, 2) for s in diag)
    cert = zp_conjugacy(A5, B5, 2)
    X = [[c % 2 for c in row] for row in cert.C]
    C = lift(T, X, 2, 2)
    assert matmul(A5, C) == matmul(C, B5)
    assert all((a - b) % 2 == 0 for ra, rb in zip(C, X) for a, b in zip(ra, rb))


def test_local_agrees_on_x2p5():
    cert = local_conjugacy(A5, B5)
    assert cert.verdict == CONJUGATE
    assert cert.transcript["genus_same"] is True
    assert set(cert.transcript["primes"]) == {2, 5}
    assert verify_certificate(A5, B5, cert)


@settings(max_examples=30)
@given(st.integers(-3, 3), st.integers(-3, 3))
def test_tampered_certificate_fails(i, j):
    cert = zp_conjugacy(A5, B5, 2)
    C = [list(r) for r in cert.C]
    if i == 0 and j == 0:
        return
    C[0][0] += i
    C[1][1] += j
    bad = ConjCertificate(cert.verdict, cert.ring, C=tuple(tuple(r) for r in C), prime=2)
    if matmul(A5, C) != matmul(C, B5) or det(C) % 2 == 0:
        assert not verify_certificate(A5, B5, bad)


def test_ext_table_row():
    F = NumberField([-2, 0, 1])
    cert = ext_conjugacy([[0, 1], [10, 0]], [[-1, 3], [3, 1]], maximal_order(F))
    assert cert.verdict == CONJUGATE
    assert cert.checks([[0, 1], [10, 0]], [[-1, 3], [3, 1]]) == {"AC_eq_CB": True, "det_unit": True, "integral": True}


def test_ext_split_polynomial_is_inconclusive():
    entry = load_catalog(fixtures.path("catalogs/x2p5.json"))[0]
    cert = ext_conjugacy(A5, B5, entry)
    assert cert.verdict == INCONCLUSIVE and cert.transcript["reason"] == "NotIrreducible"


# --- split obstruction -----------------------------------------------------

HCF = NumberField([16, 0, 12, 0, 1])


@settings(max_examples=25)
@given(st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_norm_polynomial_matches_direct_norms(c):
    w = HCF.elem(c)
    P = norm_polynomial(w)
    for k in range(-4, 5):
        assert P(k) == (1 + w * k).norm()


def test_unit_parameters():
    P = IntPoly([1, 10, 270, 700, 500])
    assert unit_parameters(P) == (0,)
    assert unit_parameters(IntPoly([0, 1])) == (-1, 1)


def test_condition_lattice_definition():
    N = [[1, 2], [3, 4]]
    lam = condition_lattice(N, (2, 6), 2)
    for x in lam:
        y = [sum(a * b for a, b in zip(row, x)) for row in N]
        assert y[0] % 2 == 0 and y[1] % 6 == 0
    # index of the lattice equals the number of residues mod (2, 6) hit by N
    assert abs(det(lam)) == len({(((x0 + 2 * x1) % 2), ((3 * x0 + 4 * x1) % 6))
                                 for x0 in range(12) for x1 in range(12)})


def test_split_obstruction_values():
    entry = load_catalog(fixtures.path("catalogs/x2p5.json"))[0]
    K = NumberField([5, 0, 1])
    v = [K.elem([2, 0]), K.elem([1, 1])]
    I = ZModule.from_generators(K, v)
    out = split_obstruction(I, entry, basis=v, direction=(1, 1, -1, 4))
    ob = out.details["obstruction"]
    assert ob.snf_diagonal == (2, 2, 10, 10)
    assert list(ob.norm_poly) == [1, 10, 270, 700, 500]
    assert ob.surviving_k == (0,)
    assert ob.residual_system_solvable[0]["solvable"] is False
    # the condition lattice is full rank here, so nothing is decided
    assert not out.decided and ob.notes["condition_lattice_rank"] == 4


def test_split_obstruction_on_fractional_ideal_scales_it():
    entry = load_catalog(fixtures.path("catalogs/x2p5.json"))[0]
    K = NumberField([5, 0, 1])
    I = ZModule.from_generators(K, [K.elem([1, 0]), K.elem([Fraction(1, 2), Fraction(1, 2)])])
    out = split_obstruction(I, entry)
    assert out.details["obstruction"].notes["scaled_by"] == 2
