"""Topologies generated by evidence, bodies of evidence and support.

Propositions are integer bitmasks over the domain (bit ``i`` is world ``i``).
A family of propositions is a tuple or frozenset of such masks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

from .errors import DomainMismatch, DomainTooLarge, SearchBudgetExceeded

DEFAULT_MAX_WORLDS = 16
MAX_BODY_EVIDENCE = 20


def canonical_key(mask: int) -> tuple[int, int]:
    """Sort key used everywhere a family of sets is listed: size, then bits."""
    return (mask.bit_count(), mask)


def canonical(family: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(set(family), key=canonical_key))


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def submasks(mask: int) -> Iterator[int]:
    """All subsets of ``mask``, including ``mask`` and 0."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


@dataclass(frozen=True)
class Topology:
    full: int
    opens: tuple[int, ...]

    def __contains__(self, mask: int) -> bool:
        return mask in self.index

    def __iter__(self) -> Iterator[int]:
        return iter(self.opens)

    def __len__(self) -> int:
        return len(self.opens)

    @cached_property
    def index(self) -> dict[int, int]:
        return {t: i for i, t in enumerate(self.opens)}

    @property
    def nonempty(self) -> tuple[int, ...]:
        return tuple(t for t in self.opens if t)

    @property
    def is_discrete(self) -> bool:
        return len(self.opens) == 1 << self.full.bit_count()


def intersection_closure(family: Iterable[int], full: int) -> set[int]:
    """Every intersection of finitely many members, the empty intersection (``full``) included."""
    closed = {full}
    frontier = set(family) | {full}
    pieces = tuple(frontier)
    closed |= frontier
    while frontier:
        new = set()
        for a in frontier:
            for e in pieces:
                c = a & e
                if c not in closed:
                    new.add(c)
        closed |= new
        frontier = new
    return closed


def generate_topology(evidence: Iterable[int], full: int,
                      max_worlds: int = DEFAULT_MAX_WORLDS) -> Topology:
    """Least topology over ``full`` in which every evidence piece is open.

    Finite intersections of the pieces form a basis; the opens are all
    unions of basis elements.
    """
    if full.bit_length() > max_worlds:
        raise DomainTooLarge(f"{full.bit_count()} worlds exceeds the cap of {max_worlds}")
    evidence = [e for e in evidence]
    for e in evidence:
        if not is_subset(e, full):
            raise DomainMismatch(f"evidence piece {e:#b} is not inside the domain {full:#b}")
    basis = intersection_closure(evidence, full)
    opens = {0}
    for b in sorted(basis, key=canonical_key):
        if b in opens:
            continue
        opens |= {o | b for o in opens}
    return Topology(full=full, opens=canonical(opens))


@dataclass(frozen=True)
class BodyOfEvidence:
    """A subfamily of the evidence with the finite intersection property."""

    members: tuple[int, ...]
    full: int = field(repr=False)

    @property
    def intersection(self) -> int:
        out = self.full
        for e in self.members:
            out &= e
        return out

    def __len__(self) -> int:
        return len(self.members)


def enumerate_bodies(model, finite_only: bool = True, maximal: bool = False) -> list[BodyOfEvidence]:
    """Non-empty subfamilies of the model's evidence with non-empty intersection.

    In a finite model every body is finite, so ``finite_only`` changes
    nothing; it is accepted to keep call sites explicit.  With ``maximal``
    only bodies that cannot be extended by a further piece are returned.
    """
    pieces = tuple(model.evidence)
    full = model.domain.full
    if len(pieces) > MAX_BODY_EVIDENCE:
        raise SearchBudgetExceeded(
            f"body enumeration over {len(pieces)} evidence pieces exceeds {MAX_BODY_EVIDENCE}")
    bodies: list[BodyOfEvidence] = []

    def extend(start: int, chosen: list[int], inter: int) -> None:
        for i in range(start, len(pieces)):
            nxt = inter & pieces[i]
            if nxt:
                chosen.append(pieces[i])
                bodies.append(BodyOfEvidence(tuple(chosen), full))
                extend(i + 1, chosen, nxt)
                chosen.pop()

    extend(0, [], full)
    if maximal:
        bodies = [b for b in bodies if _is_maximal(b, pieces)]
    return bodies


def _is_maximal(body: BodyOfEvidence, pieces: tuple[int, ...]) -> bool:
    inter = body.intersection
    chosen = set(body.members)
    return all(e in chosen or not inter & e for e in pieces)


def supports(body: BodyOfEvidence, p: int) -> bool:
    if not is_subset(p, body.full):
        raise DomainMismatch(f"proposition {p:#b} lies outside the domain")
    return is_subset(body.intersection, p)


def combined_evidence(model) -> frozenset[int]:
    """Intersections of all (finite) bodies of evidence.

    Equal to the non-empty members of the intersection closure of the
    evidence, which is how it is computed; no body enumeration is needed.
    """
    closed = intersection_closure(model.evidence, model.domain.full)
    closed.discard(0)
    return frozenset(closed)
