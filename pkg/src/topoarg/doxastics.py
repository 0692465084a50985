"""Grounded belief, evidence-based belief and maximal-body belief.

All three notions are world-independent: the optional ``world`` arguments
exist only so calls mirror the model checker and are ignored.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import argumentation as arg
from .core import Model, PropLike
from .errors import CharacterizationMismatch, InvariantViolation
from .topology import canonical, combined_evidence, enumerate_bodies, is_subset

GROUNDED = "grounded"
EVIDENCE_BASED = "evidence_based"
MAXIMAL_BODY = "maximal_body"


@dataclass(frozen=True)
class BeliefVerdict:
    believed: bool
    witness: Optional[int]
    notion: str


def _minimal_inside(family, p: int) -> Optional[int]:
    inside = [f for f in canonical(family) if is_subset(f, p)]
    return inside[0] if inside else None


def believes_grounded(model: Model, p: PropLike, world=None) -> BeliefVerdict:
    p = model.as_mask(p)
    witness = _minimal_inside(model.lfp, p)
    return BeliefVerdict(witness is not None, witness, GROUNDED)


def justification_set(model: Model) -> frozenset[int]:
    """Opens meeting every piece of combined evidence."""
    combined = combined_evidence(model)
    return frozenset(t for t in model.topology if all(t & e for e in combined))


def believes_evidence_based(model: Model, p: PropLike, world=None) -> BeliefVerdict:
    """Every non-empty open shrinks to a non-empty open inside ``p``.

    The equivalent form (some open inside ``p`` meets all combined
    evidence) is evaluated as well and must agree.
    """
    p = model.as_mask(p)
    nonempty = model.topology.nonempty
    inside = [t for t in nonempty if is_subset(t, p)]
    direct = all(any(is_subset(s, t) for s in inside) for t in nonempty)
    witness = _minimal_inside(justification_set(model), p)
    if direct != (witness is not None):
        raise CharacterizationMismatch(
            f"evidence-based belief in {model.format(p)}: strengthening gives {direct}, "
            f"justification form gives {witness is not None}")
    return BeliefVerdict(direct, witness, EVIDENCE_BASED)


def believes_maximal_body(model: Model, p: PropLike, world=None) -> BeliefVerdict:
    p = model.as_mask(p)
    bodies = enumerate_bodies(model, maximal=True)
    believed = all(is_subset(b.intersection, p) for b in bodies)
    witness = None
    if believed:
        # union of the maximal-body intersections is the weakest supporting set
        witness = 0
        for b in bodies:
            witness |= b.intersection
    return BeliefVerdict(believed, witness, MAXIMAL_BODY)


NOTIONS = {
    GROUNDED: believes_grounded,
    EVIDENCE_BASED: believes_evidence_based,
    MAXIMAL_BODY: believes_maximal_body,
}


@dataclass(frozen=True)
class BeliefComparison:
    rows: tuple[tuple[int, bool, bool], ...]   # (proposition, B, Bel)
    justification: frozenset[int]
    unattacked: frozenset[int]
    grounded: frozenset[int]

    @property
    def grounded_beliefs(self) -> frozenset[int]:
        return frozenset(p for p, b, _ in self.rows if b)

    @property
    def evidence_beliefs(self) -> frozenset[int]:
        return frozenset(p for p, _, bel in self.rows if bel)


def compare_beliefs(model: Model) -> BeliefComparison:
    """Tabulate B and Bel over every proposition and check how they relate."""
    j = justification_set(model)
    d0 = arg.characteristic(frozenset(), model.attack)
    lfp = model.lfp
    if not j <= d0:
        raise InvariantViolation("a justification is attacked")
    if not d0 <= lfp:
        raise InvariantViolation("an unattacked open is outside the grounded extension")
    rows = []
    for p in model.domain.propositions():
        b = believes_grounded(model, p).believed
        bel = believes_evidence_based(model, p).believed
        if bel and not b:
            raise InvariantViolation(f"Bel without B at {model.format(p)}")
        rows.append((p, b, bel))
    return BeliefComparison(tuple(rows), j, d0, lfp)
