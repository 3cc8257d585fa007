"""Outcomes of a principality test."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Found:
    """The lattice equals generator * order; ``generator`` is an NFElem."""

    generator: object
    details: dict = field(default_factory=dict)

    decided = True
    principal = True


@dataclass(frozen=True)
class NotPrincipal:
    """Proved non-principal; ``transcript`` holds data that lets the proof be replayed."""

    transcript: dict

    decided = True
    principal = False


@dataclass(frozen=True)
class NotFoundWithinBound:
    """Bounded search exhausted without deciding."""

    bound: object
    details: dict = field(default_factory=dict)

    decided = False
    principal = None


PrincipalityVerdict = Found | NotPrincipal | NotFoundWithinBound
