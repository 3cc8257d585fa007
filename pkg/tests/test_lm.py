import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from intconj import fixtures
from intconj.conjtest.ztest import test_z as z_conjugacy
from intconj.exactmath.linalg import char_poly, det, inverse, matmul
from intconj.exactmath.poly import IntPoly
from intconj.lm import CharPolyMismatch, classify, ideal_to_matrix, matrix_to_ideal, pair_from_ideal
from intconj.numberfield.algebra import NumberField
from intconj.numberfield.module import ZModule, colon
from intconj.numberfield.quadratic import are_equivalent, is_principal_quadratic
from oracles import reduced_form_count


def table_rows():
    rows = []
    for name in ("table1.json", "table2.json"):
        rows += json.loads(fixtures.path(name).read_text())["rows"]
    return rows


def companion_t(f):
    return [[0, 1], [-f[0], -f[1]]]


def test_lm_round_trip_on_all_table_matrices():
    for row in table_rows():
        f = IntPoly(row["f"])
        for A in (row["A"], companion_t(row["f"])):
            P = matrix_to_ideal(A, f)
            assert [list(r) for r in ideal_to_matrix(P.ideal, P.eigenbasis)] == A
            # the eigenvector satisfies A v = alpha v exactly
            alpha = P.field.gen()
            for i in range(2):
                lhs = sum((P.eigenbasis[j] * A[i][j] for j in range(2)), P.field.elem([0, 0]))
                assert lhs == alpha * P.eigenbasis[i]
            # round trip through the HNF basis lands in the same Z-class
            B = ideal_to_matrix(P.ideal)
            assert z_conjugacy(A, [list(r) for r in B]).verdict == "Conjugate"
            assert matrix_to_ideal(B, f).ideal.algebra == P.ideal.algebra


def unimodular(entries):
    """Product of elementary matrices, so det = +-1."""
    U = [[1, 0], [0, 1]]
    for k, e in enumerate(entries):
        E = [[1, e], [0, 1]] if k % 2 == 0 else [[1, 0], [e, 1]]
        U = [list(r) for r in matmul(U, E)]
    return U


ROWS = table_rows()


@settings(max_examples=25)
@given(st.sampled_from(ROWS), st.lists(st.integers(-4, 4), min_size=1, max_size=4), st.booleans())
def test_ideal_class_is_invariant_under_unimodular_conjugation(row, entries, flip):
    f = IntPoly(row["f"])
    A = row["A"]
    U = unimodular(entries)
    if flip:
        U = [list(r) for r in matmul(U, [[0, 1], [1, 0]])]
    assert abs(det(U)) == 1
    A2 = [[int(x) for x in r] for r in matmul(matmul(U, A), inverse(U))]
    assert char_poly(A2) == f
    P1, P2 = matrix_to_ideal(A, f), matrix_to_ideal(A2, f)
    O = colon(P1.ideal, P1.ideal)
    assert colon(P2.ideal, P2.ideal) == O
    assert are_equivalent(P1.ideal, P2.ideal, O)
    cert = z_conjugacy(A, A2)
    assert cert.verdict == "Conjugate"
    C = cert.C
    assert matmul(A, C) == matmul(C, A2) and abs(det(C)) == 1


def test_classify_x2p5():
    pairs = classify([5, 0, 1])
    assert len(pairs) == 2
    targets = ([[0, 1], [-5, 0]], [[-1, 2], [-3, 1]])
    for T in targets:
        hits = [p for p in pairs if z_conjugacy([list(r) for r in p.matrix], T).verdict == "Conjugate"]
        assert len(hits) == 1


def test_classify_counts_non_maximal_orders():
    # x^2 + 20: one class per invertible ideal class of Z[sqrt -20] and of Z[sqrt -5]
    assert len(classify([20, 0, 1])) == reduced_form_count(-80) + reduced_form_count(-20)


def test_char_poly_mismatch():
    with pytest.raises(CharPolyMismatch):
        matrix_to_ideal([[0, 1], [-5, 0]], IntPoly([6, 0, 1]))


def test_pair_from_ideal_principal_is_companion_class():
    K = NumberField([5, 0, 1])
    I = ZModule.from_generators(K, [K.elem([1, 0]), K.gen()])
    P = pair_from_ideal(I)
    assert z_conjugacy([list(r) for r in P.matrix], [[0, 1], [-5, 0]]).verdict == "Conjugate"
    assert is_principal_quadratic(I, colon(I, I)).principal


def test_ideal_to_matrix_rejects_unstable_lattice():
    K = NumberField([5, 0, 1])
    I = ZModule.from_generators(K, [K.elem([1, 0]), K.elem([0, 2])])
    with pytest.raises(ValueError):
        ideal_to_matrix(I)
