"""Conjugacy over the ring of integers O_F of a catalog field F."""

from __future__ import annotations

from ..lm import conjugator_from_bases
from ..numberfield.algebra import NumberField
from ..numberfield.extension import (
    DEFAULT_BOUND_FACTOR,
    DEFAULT_PRECISION,
    extend_order,
    extend_scalars,
    is_irreducible_over,
    is_principal_extended,
)
from ..numberfield.module import Order, colon
from .certificate import CONJUGATE, INCONCLUSIVE, NOT_CONJUGATE, ConjCertificate, check_conjugator
from .common import require_irreducible, shared_char_poly
from .ztest import genus_data


def _order_of(entry):
    if isinstance(entry, Order):
        return entry
    order = getattr(entry, "order", None)
    if order is None:
        raise ValueError("catalog entry has no integral basis")
    return order


def _ring_tag(entry, OF):
    return {"kind": "OF", "field": getattr(entry, "name", OF.algebra.name)}


def extension_data(A, B, f, OF):
    """Extended LM data: (I_hat, J_hat, O_hat, colon lattice) in L = F[y]/(f)."""
    PA, PB, OA, OB = genus_data(A, B, f, NumberField(f))
    I_hat = extend_scalars(PA.ideal, OF, basis=PA.eigenbasis, check=False)
    J_hat = extend_scalars(PB.ideal, OF, basis=PB.eigenbasis, check=False)
    O_hat = extend_order(OA, OF)
    X = extend_scalars(colon(PA.ideal, PB.ideal), OF, check=False).module
    return PA, PB, OA, OB, I_hat, J_hat, O_hat, X


def test_ext(A, B, entry, bound_factor=DEFAULT_BOUND_FACTOR, precision=DEFAULT_PRECISION,
             max_candidates=None):
    """Algorithm over O_F for a pair with irreducible quadratic char poly.

    A found generator gives a certificate; an exhausted search gives
    Inconclusive (never NotConjugate, except for differing genus).
    """
    A, B, f = shared_char_poly(A, B)
    require_irreducible(f)
    if f.degree != 2:
        raise ValueError("extension tests are implemented for quadratic f")
    OF = _order_of(entry)
    F = OF.algebra
    ring = _ring_tag(entry, OF)
    if not is_irreducible_over(f, OF, precision):
        return ConjCertificate(INCONCLUSIVE, ring, field=F, transcript={
            "reason": "NotIrreducible",
            "detail": f"{f.format()} has a root in F; use the split obstruction",
        })
    PA, PB, OA, OB, I_hat, J_hat, O_hat, X = extension_data(A, B, f, OF)
    if OA != OB:
        return ConjCertificate(NOT_CONJUGATE, ring, field=F, transcript={
            "reason": "multiplicator rings differ",
        })
    verdict = is_principal_extended(X, O_hat, bound_factor, precision, max_candidates)
    if not verdict.decided:
        return ConjCertificate(INCONCLUSIVE, ring, field=F, transcript={
            "reason": "NotFoundWithinBound",
            "bound": str(verdict.bound),
            "candidates": verdict.details.get("candidates"),
            "truncated": verdict.details.get("truncated", False),
        })
    gamma = verdict.generator
    C = conjugator_from_bases(A, B, I_hat.rel_basis, J_hat.rel_basis, gamma, F)
    checks = check_conjugator(A, B, C, ring, F, OF)
    if not all(checks.values()):
        raise AssertionError(f"conjugator over O_F failed verification: {checks}")
    return ConjCertificate(CONJUGATE, ring, C=tuple(tuple(r) for r in C), field=F, transcript={
        "generator": [str(c) for c in gamma.coords],
        "candidates": verdict.details.get("candidates"),
        "bound": str(verdict.details.get("bound")),
    })
