"""Worlds, propositions and the validated topological argumentation model."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from os import PathLike
from types import MappingProxyType
from typing import Any, Iterable, Mapping, Union

from . import argumentation as arg
from .errors import (
    AttackInvalid,
    DomainMismatch,
    DomainTooLarge,
    DuplicateWorld,
    EmptyDomain,
    EmptyEvidencePiece,
    EvidenceOutsideDomain,
    MissingUnit,
    ModelError,
    NotAnOpen,
    UnknownWorld,
)
from .topology import DEFAULT_MAX_WORLDS, Topology, canonical, generate_topology

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Domain:
    """Ordered world labels; world ``i`` is bit ``i`` of every proposition mask."""

    labels: tuple[str, ...]

    def __post_init__(self):
        if not self.labels:
            raise EmptyDomain("a model needs at least one world")
        seen = set()
        for w in self.labels:
            if w in seen:
                raise DuplicateWorld(f"world {w!r} listed twice")
            seen.add(w)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {w: i for i, w in enumerate(self.labels)}

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def full(self) -> int:
        return (1 << len(self.labels)) - 1

    def index(self, label: str) -> int:
        try:
            return self._index[str(label)]
        except KeyError:
            raise UnknownWorld(f"unknown world {label!r}") from None

    def mask(self, labels: Iterable[str]) -> int:
        out = 0
        for w in labels:
            out |= 1 << self.index(w)
        return out

    def members(self, mask: int) -> tuple[str, ...]:
        return tuple(w for i, w in enumerate(self.labels) if mask >> i & 1)

    def format(self, mask: int) -> str:
        return "{" + ",".join(self.members(mask)) + "}"

    def format_family(self, family: Iterable[int]) -> str:
        return "{" + ", ".join(self.format(t) for t in canonical(family)) + "}"

    def propositions(self) -> range:
        return range(1 << len(self.labels))

    def prop(self, labels: Iterable[str]) -> PropositionSet:
        return PropositionSet(self, self.mask(labels))


@dataclass(frozen=True)
class PropositionSet:
    """A set of worlds of one fixed domain, with set algebra relative to it."""

    domain: Domain
    bits: int

    def __post_init__(self):
        if self.bits & ~self.domain.full or self.bits < 0:
            raise DomainMismatch(f"mask {self.bits:#b} has worlds outside the domain")

    def _other(self, other: PropositionSet) -> int:
        if not isinstance(other, PropositionSet):
            return NotImplemented
        if other.domain != self.domain:
            raise DomainMismatch("propositions over different domains")
        return other.bits

    def __and__(self, other):
        return PropositionSet(self.domain, self.bits & self._other(other))

    def __or__(self, other):
        return PropositionSet(self.domain, self.bits | self._other(other))

    def __sub__(self, other):
        return PropositionSet(self.domain, self.bits & ~self._other(other))

    def __invert__(self):
        return PropositionSet(self.domain, self.domain.full & ~self.bits)

    def __le__(self, other):
        return self.bits & ~self._other(other) == 0

    def __lt__(self, other):
        return self <= other and self.bits != other.bits

    def __iter__(self):
        return iter(self.domain.members(self.bits))

    def __len__(self):
        return self.bits.bit_count()

    def __bool__(self):
        return bool(self.bits)

    def __str__(self):
        return self.domain.format(self.bits)


PropLike = Union[PropositionSet, int, Iterable[str]]


@dataclass(frozen=True, eq=False)
class Model:
    """A topological argumentation model.

    Built by :func:`build_model`, which guarantees that ``topology`` is
    generated by ``evidence`` and that ``attack`` passes validation.
    """

    domain: Domain
    evidence: tuple[int, ...]
    topology: Topology
    attack: arg.AttackGraph
    valuation: Mapping[str, int]

    def __eq__(self, other):
        if not isinstance(other, Model):
            return NotImplemented
        return (self.domain == other.domain and self.evidence == other.evidence
                and self.topology == other.topology and self.attack == other.attack
                and dict(self.valuation) == dict(other.valuation))

    __hash__ = None

    @property
    def worlds(self) -> tuple[str, ...]:
        return self.domain.labels

    @cached_property
    def grounded(self) -> arg.ExtensionReport:
        return arg.grounded_extension(self.attack)

    @property
    def lfp(self) -> frozenset[int]:
        return self.grounded.grounded

    def believes(self, p: int) -> bool:
        return any(f & ~p == 0 for f in self.lfp)

    def as_mask(self, p: PropLike) -> int:
        return as_mask(self.domain, p)

    def format(self, mask: int) -> str:
        return self.domain.format(mask)


def as_mask(domain: Domain, p: PropLike) -> int:
    if isinstance(p, PropositionSet):
        if p.domain != domain:
            raise DomainMismatch("proposition belongs to another domain")
        return p.bits
    if isinstance(p, int):
        if p < 0 or p & ~domain.full:
            raise DomainMismatch(f"mask {p:#b} has worlds outside the domain")
        return p
    if isinstance(p, str):
        raise TypeError("pass world labels as a list, not a bare string")
    return domain.mask(p)


# -- set algebra on proposition sets -----------------------------------------

def union(a: PropositionSet, b: PropositionSet) -> PropositionSet:
    return a | b


def intersection(a: PropositionSet, b: PropositionSet) -> PropositionSet:
    return a & b


def complement(a: PropositionSet) -> PropositionSet:
    return ~a


def subset(a: PropositionSet, b: PropositionSet) -> bool:
    return a <= b


# -- attack specifications -----------------------------------------------------

@dataclass(frozen=True)
class AttackSpec:
    """How to build the attack relation.

    ``mode`` is ``"explicit"`` (``pairs`` of (attacked, attacker), each a
    label list or a mask), ``"symmetric"`` (every conflict is mutual) or
    ``"measure"`` (``weights`` per world; ``a <- b`` iff disjoint and
    ``w(a) <= w(b)``).
    """

    mode: str
    pairs: tuple = ()
    weights: Mapping[str, Any] | None = None

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> AttackSpec:
        mode = data.get("mode")
        if mode not in ("explicit", "symmetric", "measure"):
            raise ModelError(f"unknown attack mode {mode!r}")
        return cls(mode=mode, pairs=tuple(tuple(p) for p in data.get("pairs", ())),
                   weights=data.get("weights"))


def parse_fraction(value: Any) -> Fraction:
    if isinstance(value, bool):
        raise ModelError(f"not a number: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    try:
        return Fraction(str(value).strip())
    except (ValueError, ZeroDivisionError):
        raise ModelError(f"not a rational number: {value!r}") from None


def _build_attack(spec: AttackSpec, domain: Domain, topology: Topology, close: bool) -> arg.AttackGraph:
    if spec.mode == "symmetric":
        return arg.symmetric_attack(topology)
    if spec.mode == "measure":
        if not spec.weights:
            raise ModelError("measure mode needs per-world weights")
        per_index = {}
        for w in domain.labels:
            if w not in spec.weights:
                raise ModelError(f"no weight for world {w!r}")
            value = parse_fraction(spec.weights[w])
            if value <= 0:
                raise ModelError(f"weight of world {w!r} must be positive, got {value}")
            per_index[domain.index(w)] = value
        extra = set(spec.weights) - set(domain.labels)
        if extra:
            raise UnknownWorld(f"weights for unknown worlds {sorted(extra)}")
        return arg.measure_attack(topology, arg.weight_function(per_index))
    edges = set()
    for pair in spec.pairs:
        if len(pair) != 2:
            raise ModelError(f"attack pair must be [attacked, attacker], got {pair!r}")
        attacked, attacker = (as_mask(domain, x) for x in pair)
        for t in (attacked, attacker):
            if t not in topology:
                raise NotAnOpen(f"{domain.format(t)} is not open")
        edges.add((attacked, attacker))
    if close:
        edges = arg.close_downward(edges, topology.opens)
    return arg.complete_relation(edges, topology)


def build_model(worlds: Iterable[str], evidence: Iterable[PropLike],
                attack_spec: AttackSpec | Mapping[str, Any],
                valuation: Mapping[str, PropLike] | None = None, *,
                strict: bool = False, close: bool = False,
                max_worlds: int = DEFAULT_MAX_WORLDS) -> Model:
    """Validate inputs, generate the topology and materialise the attack relation.

    A missing unit is added with a logged warning unless ``strict`` is set.
    With ``close`` explicit attacks are closed downward before validation.
    """
    domain = Domain(tuple(str(w) for w in worlds))
    if domain.size > max_worlds:
        raise DomainTooLarge(f"{domain.size} worlds exceeds the cap of {max_worlds}")
    pieces = []
    for piece in evidence:
        try:
            m = as_mask(domain, piece)
        except (UnknownWorld, DomainMismatch) as exc:
            raise EvidenceOutsideDomain(str(exc)) from None
        if not m:
            raise EmptyEvidencePiece("evidence pieces must be non-empty")
        pieces.append(m)
    if domain.full not in pieces:
        if strict:
            raise MissingUnit("the evidence must contain the whole domain")
        log.warning("evidence lacks the whole domain; adding it")
        pieces.append(domain.full)
    evidence_family = canonical(pieces)
    topology = generate_topology(evidence_family, domain.full, max_worlds=max_worlds)

    if not isinstance(attack_spec, AttackSpec):
        attack_spec = AttackSpec.from_json(attack_spec)
    graph = _build_attack(attack_spec, domain, topology, close)
    violations = arg.validate_attack(graph)
    if violations:
        raise AttackInvalid(violations, describe=lambda v: describe_violation(domain, v))

    values = {}
    for name, p in (valuation or {}).items():
        try:
            values[str(name)] = as_mask(domain, p)
        except UnknownWorld as exc:
            raise EvidenceOutsideDomain(f"valuation of {name!r}: {exc}") from None
    return Model(domain, evidence_family, topology, graph, MappingProxyType(values))


def describe_violation(domain: Domain, v: arg.Violation) -> str:
    sets = ", ".join(domain.format(t) for t in v.witness)
    return f"{v.reason} ({sets})"


# -- JSON ----------------------------------------------------------------------

def load_json(source: str | PathLike | Mapping[str, Any]) -> dict:
    if isinstance(source, Mapping):
        return dict(source)
    try:
        with open(source) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ModelError(f"{source}: invalid JSON: {exc}") from None


def model_from_json(data: Mapping[str, Any], **options) -> Model:
    for key in ("worlds", "evidence", "attack"):
        if key not in data:
            raise ModelError(f"model file lacks {key!r}")
    return build_model(data["worlds"], data["evidence"], data["attack"],
                       data.get("valuation", {}), **options)


def load_model(source: str | PathLike | Mapping[str, Any], **options) -> Model:
    return model_from_json(load_json(source), **options)


def model_to_json(model: Model) -> dict:
    """Self-contained explicit-mode serialisation that reloads to an equal model."""
    d = model.domain
    pairs = sorted(model.attack.nonempty_edges,
                   key=lambda e: (e[0].bit_count(), e[0], e[1].bit_count(), e[1]))
    return {
        "worlds": list(d.labels),
        "evidence": [list(d.members(e)) for e in model.evidence],
        "attack": {"mode": "explicit",
                   "pairs": [[list(d.members(a)), list(d.members(b))] for a, b in pairs]},
        "valuation": {k: list(d.members(v)) for k, v in model.valuation.items()},
    }
