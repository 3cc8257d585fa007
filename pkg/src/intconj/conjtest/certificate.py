"""Certificates for conjugacy verdicts and their exact re-verification."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..exactmath.linalg import det, matmul
from ..numberfield import fieldlinalg as fl

CONJUGATE = "Conjugate"
NOT_CONJUGATE = "NotConjugate"
INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class ObstructionTranscript:
    """Data of the split-case obstruction.

    ``norm_poly`` is the coefficient list (lowest degree first) of
    k -> N(1 + k w); ``surviving_k`` are its integer solutions of +-1.
    """

    snf_diagonal: tuple
    span_vector: tuple | None
    norm_poly: tuple | None
    surviving_k: tuple
    residual_system_solvable: dict
    condition_lattice: tuple = ()
    generator: tuple = ()
    notes: dict = field(default_factory=dict)

    def to_dict(self):
        return {
            "snf_diagonal": list(self.snf_diagonal),
            "span_vector": list(self.span_vector) if self.span_vector is not None else None,
            "norm_poly": list(self.norm_poly) if self.norm_poly is not None else None,
            "surviving_k": list(self.surviving_k),
            "residual_system_solvable": {str(k): v for k, v in self.residual_system_solvable.items()},
            "condition_lattice": [list(r) for r in self.condition_lattice],
            "generator": [str(c) for c in self.generator],
            "notes": self.notes,
        }


@dataclass(frozen=True)
class ConjCertificate:
    """Verdict plus witness.

    ``ring`` is {"kind": "Z"} , {"kind": "Zp", "p": p}, {"kind": "OF", ...}
    or {"kind": "local"}.  For "OF" the entries of ``C`` are NFElems of the
    field F (``field``), otherwise integers.
    """

    verdict: str
    ring: dict
    C: tuple | None = None
    transcript: dict | None = None
    prime: int | None = None
    k_prime: int | None = None
    field: object = None
    parts: tuple = ()

    @property
    def decided(self):
        return self.verdict != INCONCLUSIVE

    def checks(self, A, B):
        return check_conjugator(A, B, self.C, self.ring, self.field) if self.C is not None else {}


def _p_valuation_zero(d, p):
    return Fraction(d).numerator % p != 0 and Fraction(d).denominator % p != 0


def check_conjugator(A, B, C, ring, field=None, order_F=None):
    """Exact checks {"AC_eq_CB": bool, "det_unit": bool, "integral": bool}."""
    kind = ring["kind"]
    if kind in ("Z", "Zp", "local"):
        ac_cb = matmul(A, C) == matmul(C, B)
        d = det(C)
        integral = all(Fraction(x).denominator == 1 for row in C for x in row)
        if kind == "Z":
            unit = d in (1, -1)
        else:
            unit = _p_valuation_zero(d, ring["p"])
        return {"AC_eq_CB": ac_cb, "det_unit": bool(unit), "integral": integral}
    if kind == "OF":
        F = field
        Af = fl.from_int_matrix(A, F)
        Bf = fl.from_int_matrix(B, F)
        ac_cb = fl.matmul(Af, C, F) == fl.matmul(C, Bf, F)
        d = fl.det(C, F)
        unit = abs(d.norm()) == 1
        integral = True
        if order_F is not None:
            integral = all(order_F.contains(x) for row in C for x in row)
        return {"AC_eq_CB": ac_cb, "det_unit": unit, "integral": integral}
    raise ValueError(f"unknown ring kind {kind}")


def verify_certificate(A, B, cert, order_F=None):
    """Re-check a Conjugate certificate; other verdicts carry no matrix."""
    if cert.verdict != CONJUGATE:
        return True
    if cert.ring["kind"] == "local":
        return all(verify_certificate(A, B, c) for c in cert.parts)
    if cert.C is None:
        return False
    return all(check_conjugator(A, B, cert.C, cert.ring, cert.field, order_F).values())
