"""Conjugacy over Z through ideal classes."""

from __future__ import annotations

from fractions import Fraction

from ..exactmath.linalg import identity
from ..lm import conjugator_from_bases, matrix_to_ideal
from ..numberfield.algebra import QQ, NumberField, RelativeAlgebra
from ..numberfield.extension import k_to_L
from ..numberfield.module import colon
from ..numberfield.quadratic import is_principal_quadratic
from .certificate import CONJUGATE, INCONCLUSIVE, NOT_CONJUGATE, ConjCertificate, check_conjugator
from .common import require_irreducible, shared_char_poly

RING_Z = {"kind": "Z"}


def _hnf_data(M):
    return {"basis": [list(r) for r in M.basis], "denominator": M.denominator}


def genus_data(A, B, f, K=None):
    """LM pairs of A and B and their multiplicator rings."""
    K = K or NumberField(f)
    PA = matrix_to_ideal(A, f, K)
    PB = matrix_to_ideal(B, f, K)
    OA = colon(PA.ideal, PA.ideal)
    OB = colon(PB.ideal, PB.ideal)
    return PA, PB, OA, OB


def test_z(A, B):
    """Decide GL_n(Z)-conjugacy of A and B.

    Rigorous for irreducible quadratic characteristic polynomials; for
    higher degree only a differing multiplicator ring is decisive.
    """
    A, B, f = shared_char_poly(A, B)
    require_irreducible(f)
    if A == B:
        return ConjCertificate(CONJUGATE, RING_Z, C=identity(len(A)))
    K = NumberField(f)
    PA, PB, OA, OB = genus_data(A, B, f, K)
    if OA != OB:
        return ConjCertificate(NOT_CONJUGATE, RING_Z, transcript={
            "reason": "multiplicator rings differ",
            "ring_A": _hnf_data(OA),
            "ring_B": _hnf_data(OB),
        })
    if f.degree != 2:
        return ConjCertificate(INCONCLUSIVE, RING_Z, transcript={
            "reason": "same genus; ideal classes are only decided for quadratic f",
        })
    X = colon(PA.ideal, PB.ideal)
    verdict = is_principal_quadratic(X, OA)
    if not verdict.principal:
        return ConjCertificate(NOT_CONJUGATE, RING_Z, transcript={
            "reason": "colon ideal is not principal",
            "colon_ideal": _hnf_data(X),
            "proof": verdict.transcript,
        })
    L = RelativeAlgebra(QQ, f)
    v = [k_to_L(L, x) for x in PA.eigenbasis]
    w = [k_to_L(L, x) for x in PB.eigenbasis]
    C = conjugator_from_bases(A, B, v, w, k_to_L(L, verdict.generator), QQ)
    C = tuple(tuple(_to_int(x.coords[0]) for x in row) for row in C)
    checks = check_conjugator(A, B, C, RING_Z)
    if not all(checks.values()):
        raise AssertionError(f"conjugator failed verification: {checks}")
    return ConjCertificate(CONJUGATE, RING_Z, C=C, transcript={
        "generator": [str(c) for c in verdict.generator.coords],
    })


def _to_int(x):
    x = Fraction(x)
    if x.denominator != 1:
        raise AssertionError("conjugator over Z has a non-integral entry")
    return int(x)
