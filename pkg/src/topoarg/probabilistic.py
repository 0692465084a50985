"""Probabilistic belief (measure above one half) and its argumentation counterpart.

Masses are :class:`fractions.Fraction`; nothing here touches floats, since
ties at exactly one half and equal masses decide attack edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Mapping

from . import argumentation as arg
from .core import AttackSpec, Domain, Model, build_model, parse_fraction
from .errors import DomainTooLarge, InvalidMeasure, ZeroMassWorld
from .logic import Formula, NeighborhoodModel, extension
from .topology import generate_topology

HALF = Fraction(1, 2)
MAX_CORRESPONDENCE_WORLDS = 5


@dataclass(frozen=True, eq=False)
class ProbabilisticModel:
    domain: Domain
    mu: Mapping[str, Fraction]
    valuation: Mapping[str, int]
    threshold: Fraction = HALF

    def __post_init__(self):
        missing = set(self.domain.labels) - set(self.mu)
        if missing:
            raise InvalidMeasure(f"no mass for worlds {sorted(missing)}")
        extra = set(self.mu) - set(self.domain.labels)
        if extra:
            raise InvalidMeasure(f"mass for unknown worlds {sorted(extra)}")
        for w, m in self.mu.items():
            if not isinstance(m, Fraction):
                raise InvalidMeasure(f"mass of {w!r} must be a Fraction, got {type(m).__name__}")
            if m < 0:
                raise InvalidMeasure(f"negative mass {m} at world {w!r}")
        total = sum(self.mu.values(), Fraction(0))
        if total != 1:
            raise InvalidMeasure(f"masses sum to {total}, not 1")

    def measure(self, mask: int) -> Fraction:
        return sum((self.mu[w] for w in self.domain.members(mask)), Fraction(0))

    def believes(self, p: int) -> bool:
        return self.measure(p) > self.threshold

    @property
    def strictly_positive(self) -> bool:
        return all(m > 0 for m in self.mu.values())


def probabilistic_model(worlds, mu: Mapping[str, Any], valuation=None,
                        threshold: Fraction = HALF) -> ProbabilisticModel:
    domain = Domain(tuple(str(w) for w in worlds))
    masses = {str(w): parse_fraction(m) for w, m in mu.items()}
    val = {k: domain.mask(v) for k, v in (valuation or {}).items()}
    return ProbabilisticModel(domain, masses, val, threshold)


def pmodel_from_json(data: Mapping[str, Any]) -> ProbabilisticModel:
    for key in ("worlds", "mu"):
        if key not in data:
            raise InvalidMeasure(f"probabilistic model file lacks {key!r}")
    return probabilistic_model(data["worlds"], data["mu"], data.get("valuation"))


def pmodel_to_json(pmodel: ProbabilisticModel) -> dict:
    d = pmodel.domain
    return {
        "worlds": list(d.labels),
        "mu": {w: str(pmodel.mu[w]) for w in d.labels},
        "valuation": {k: list(d.members(v)) for k, v in pmodel.valuation.items()},
    }


def believes_probabilistic(pmodel: ProbabilisticModel, phi: Formula) -> bool:
    return pmodel.believes(extension(pmodel, phi))


def _require_positive(pmodel: ProbabilisticModel) -> None:
    zero = [w for w, m in pmodel.mu.items() if m == 0]
    if zero:
        raise ZeroMassWorld(f"worlds with zero mass: {zero}")


def mu_attack(pmodel: ProbabilisticModel) -> arg.AttackGraph:
    """``e <- e'`` over all subsets iff disjoint and ``mu(e) <= mu(e')``."""
    _require_positive(pmodel)
    full = pmodel.domain.full
    singletons = [1 << i for i in range(pmodel.domain.size)]
    topology = generate_topology(singletons, full)
    return arg.measure_attack(topology, pmodel.measure)


def pb_to_neighborhood(pmodel: ProbabilisticModel) -> NeighborhoodModel:
    n = frozenset(s for s in pmodel.domain.propositions() if pmodel.believes(s))
    return NeighborhoodModel(pmodel.domain, n, dict(pmodel.valuation))


def to_argumentation_model(pmodel: ProbabilisticModel) -> Model:
    """Singleton evidence plus the whole domain, the discrete topology and the measure attack."""
    _require_positive(pmodel)
    d = pmodel.domain
    evidence = [1 << i for i in range(d.size)] + [d.full]
    spec = AttackSpec("measure", weights=dict(pmodel.mu))
    return build_model(d.labels, evidence, spec, dict(pmodel.valuation), strict=True)


@dataclass(frozen=True)
class Correspondence:
    model: Model
    grounded: frozenset[int]
    threshold_sets: frozenset[int]
    violations: tuple
    transitivity_failures: tuple
    disagreements: tuple[int, ...]   # propositions where B and PB differ

    @property
    def lfp_matches(self) -> bool:
        return self.grounded == self.threshold_sets

    @property
    def holds(self) -> bool:
        return (self.lfp_matches and not self.violations
                and not self.transitivity_failures and not self.disagreements)


def pb_grounded_correspondence(pmodel: ProbabilisticModel,
                               max_worlds: int = MAX_CORRESPONDENCE_WORLDS) -> Correspondence:
    if pmodel.domain.size > max_worlds:
        raise DomainTooLarge(f"correspondence check limited to {max_worlds} worlds")
    if pmodel.threshold != HALF:
        raise InvalidMeasure("the correspondence is only stated for the threshold 1/2")
    model = to_argumentation_model(pmodel)
    graph = mu_attack(pmodel)
    threshold_sets = frozenset(s for s in pmodel.domain.propositions() if pmodel.believes(s))
    disagreements = tuple(p for p in pmodel.domain.propositions()
                          if model.believes(p) != pmodel.believes(p))
    return Correspondence(
        model=model,
        grounded=model.lfp,
        threshold_sets=threshold_sets,
        violations=tuple(arg.validate_attack(graph)),
        transitivity_failures=tuple(arg.conditional_transitivity_violations(graph)),
        disagreements=disagreements,
    )
