"""Search a catalog of candidate fields F for one over which a locally
conjugate pair becomes conjugate.

Each entry is tested against the two criteria: f stays irreducible over
O_F, and O_F (x) (I:J)O is principal.  Class fields are never computed
here; catalogs are curated inputs.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from pathlib import Path

from .conjtest.certificate import CONJUGATE, NOT_CONJUGATE, verify_certificate
from .conjtest.exttest import test_ext
from .conjtest.padic import test_local
from .conjtest.split import split_obstruction
from .conjtest.ztest import genus_data
from .exactmath.linalg import char_poly
from .exactmath.poly import IntPoly
from .lm import LMPair, pair_from_ideal
from .numberfield.algebra import NumberField, is_irreducible_over_q
from .numberfield.extension import DEFAULT_BOUND_FACTOR, DEFAULT_PRECISION, is_irreducible_over
from .numberfield.module import Order, colon, module_norm

PASS = "Pass"
FAIL_IRREDUCIBLE = "FailIrreducible"
INCONCLUSIVE = "Inconclusive"
SKIPPED_COPRIMALITY = "SkippedCoprimality"
NOT_EVALUATED = "NotEvaluated"


class MalformedEntry(ValueError):
    pass


class NotLocallyConjugate(ValueError):
    """search_catalog refuses pairs that are not locally conjugate."""


@dataclass(frozen=True)
class FieldCatalogEntry:
    name: str
    defining_poly: IntPoly
    integral_basis: tuple
    source: str = ""
    modulus_norm: int | None = None

    def __post_init__(self):
        poly = self.defining_poly
        if not isinstance(poly, IntPoly):
            poly = IntPoly(poly)
            object.__setattr__(self, "defining_poly", poly)
        if not poly.is_monic or not is_irreducible_over_q(poly):
            raise MalformedEntry(f"{self.name}: defining polynomial must be monic irreducible")
        rows = tuple(tuple(Fraction(c) for c in r) for r in self.integral_basis)
        if len(rows) != poly.degree or any(len(r) != poly.degree for r in rows):
            raise MalformedEntry(f"{self.name}: integral basis must be {poly.degree} x {poly.degree}")
        object.__setattr__(self, "integral_basis", rows)
        if self.modulus_norm is not None and int(self.modulus_norm) < 1:
            raise MalformedEntry(f"{self.name}: modulus_norm must be positive")

    @cached_property
    def field(self):
        return NumberField(self.defining_poly, name=self.name)

    @cached_property
    def order(self):
        try:
            return Order.from_generators(self.field, self.integral_basis)
        except ValueError as exc:
            raise MalformedEntry(f"{self.name}: integral basis is not a ring: {exc}") from exc

    def to_dict(self):
        out = {
            "name": self.name,
            "poly": list(self.defining_poly.coeffs),
            "integral_basis": [[[str(c.numerator), str(c.denominator)] for c in r] for r in self.integral_basis],
            "source": self.source,
        }
        if self.modulus_norm is not None:
            out["modulus_norm"] = self.modulus_norm
        return out

    @classmethod
    def from_dict(cls, d):
        try:
            basis = [[Fraction(int(c[0]), int(c[1])) for c in r] for r in d["integral_basis"]]
            return cls(d["name"], IntPoly(d["poly"]), basis, d.get("source", ""), d.get("modulus_norm"))
        except (KeyError, TypeError, IndexError) as exc:
            raise MalformedEntry(f"bad catalog entry {d!r}: {exc}") from exc


def load_catalog(source):
    """Entries from a JSON file path, JSON text or a list of dicts."""
    if isinstance(source, str) and source.lstrip().startswith("["):
        data = json.loads(source)
    elif isinstance(source, (str, Path)):
        data = json.loads(Path(source).read_text())
    elif hasattr(source, "read_text"):
        data = json.loads(source.read_text())
    else:
        data = source
    return [e if isinstance(e, FieldCatalogEntry) else FieldCatalogEntry.from_dict(e) for e in data]


@dataclass(frozen=True)
class CandidateOutcome:
    entry: str
    status: str
    certificate: object = None
    details: dict = field(default_factory=dict)

    @property
    def passed(self):
        return self.status == PASS


@dataclass(frozen=True)
class SearchReport:
    problem_id: str
    outcomes: tuple
    first_pass: str | None

    @property
    def passed(self):
        return self.first_pass is not None


def _as_pair(X):
    return X if isinstance(X, LMPair) else pair_from_ideal(X)


def coprime_to_colon(modulus_norm, X, O):
    """gcd(modulus_norm, N) == 1, N the numerator times denominator of [O : X]."""
    n = module_norm(X, O)
    return math.gcd(int(modulus_norm), n.numerator * n.denominator) == 1


def evaluate_candidate(f, I, J, O, entry, bound_factor=DEFAULT_BOUND_FACTOR,
                       precision=DEFAULT_PRECISION, route_split=False, max_candidates=None):
    """Test one catalog entry for the pair of ideals I, J (ZModules or LMPairs)."""
    f = f if isinstance(f, IntPoly) else IntPoly(f)
    PI, PJ = _as_pair(I), _as_pair(J)
    if colon(PI.ideal, PI.ideal) != O or colon(PJ.ideal, PJ.ideal) != O:
        raise ValueError("O must be the multiplicator ring of both I and J")
    X = colon(PI.ideal, PJ.ideal)
    details = {"colon_norm": str(module_norm(X, O))}
    if entry.modulus_norm is not None and not coprime_to_colon(entry.modulus_norm, X, O):
        return CandidateOutcome(entry.name, SKIPPED_COPRIMALITY, details={
            **details, "modulus_norm": entry.modulus_norm,
        })
    OF = entry.order
    if not is_irreducible_over(f, OF, precision):
        if route_split and f.degree == 2:
            verdict = split_obstruction(X, entry, bound_factor=bound_factor, precision=precision)
            details["split_obstruction"] = verdict
        return CandidateOutcome(entry.name, FAIL_IRREDUCIBLE, details=details)
    cert = test_ext(PI.matrix, PJ.matrix, entry, bound_factor, precision, max_candidates)
    if cert.verdict == CONJUGATE:
        return CandidateOutcome(entry.name, PASS, certificate=cert, details=details)
    if cert.verdict == NOT_CONJUGATE:
        raise AssertionError("ideals with equal multiplicator rings reported in different genera")
    return CandidateOutcome(entry.name, INCONCLUSIVE, certificate=cert, details=details)


def search_catalog(A, B, catalog, exhaustive=False, bound_factor=DEFAULT_BOUND_FACTOR,
                   precision=DEFAULT_PRECISION, route_split=False, problem_id="", max_candidates=None):
    """Evaluate catalog entries in order; stop at the first Pass unless
    ``exhaustive``.  Entries after the stop are reported as NotEvaluated."""
    local = test_local(A, B)
    if local.verdict != CONJUGATE:
        raise NotLocallyConjugate("A and B are not locally conjugate; no extension can conjugate them")
    f = char_poly(A)
    PA, PB, OA, _ = genus_data(A, B, f)
    outcomes = []
    first = None
    for entry in catalog:
        if first is not None and not exhaustive:
            outcomes.append(CandidateOutcome(entry.name, NOT_EVALUATED))
            continue
        out = evaluate_candidate(f, PA, PB, OA, entry, bound_factor, precision, route_split, max_candidates)
        if out.passed:
            if not verify_certificate(A, B, out.certificate, entry.order):
                raise AssertionError(f"certificate for {entry.name} failed re-verification")
            if first is None:
                first = entry.name
        outcomes.append(out)
    return SearchReport(problem_id, tuple(outcomes), first)

