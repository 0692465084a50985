"""Named properties and a seeded sweep runner.

Each property maps a model to a list of failure messages; an empty list
means it held.  Properties registered as ``sufficient`` are known to fail
on some models and never make a sweep fail.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence, Union

from . import argumentation as arg
from . import doxastics as dx
from . import logic, oracles
from .core import Model, model_to_json
from .errors import UnknownProperty
from .generators import GeneratorConfig, generate_random_model, random_neighborhood_model
from .topology import combined_evidence, enumerate_bodies, is_subset

MUST_HOLD = "must-hold"
SUFFICIENT = "sufficient-condition only"


@dataclass(frozen=True)
class Property:
    name: str
    check: Callable[[Model], list[str]]
    kind: str = MUST_HOLD
    doc: str = ""


REGISTRY: dict[str, Property] = {}


def register(name: str, kind: str = MUST_HOLD):
    def deco(fn):
        REGISTRY[name] = Property(name, fn, kind, (fn.__doc__ or "").strip())
        return fn
    return deco


def _fmt(model: Model, *sets: int) -> str:
    return ", ".join(model.format(s) for s in sets)


@register("validate")
def _validate(m: Model) -> list[str]:
    """Attack conditions hold, by the validator and by an exhaustive scan."""
    out = [f"condition {v.condition}: {_fmt(m, *v.witness)}" for v in arg.validate_attack(m.attack)]
    scan = oracles.attack_condition_scan(m.topology.opens, m.attack.edges)
    out += [f"scan condition {c}: {_fmt(m, *w)}" for c, ws in scan.items() for w in ws]
    return out


@register("topology")
def _topology(m: Model) -> list[str]:
    """Generated topology equals the naive closure of the evidence."""
    naive = oracles.naive_topology(m.evidence, m.domain.full)
    return [] if set(m.topology.opens) == naive else ["topology differs from naive closure"]


@register("grounded_complete")
def _grounded_complete(m: Model) -> list[str]:
    """Grounded extension holds X, never the empty set, and is conflict-free and complete."""
    out = []
    lfp = m.lfp
    if m.domain.full not in lfp:
        out.append("X missing from the grounded extension")
    if 0 in lfp:
        out.append("empty set in the grounded extension")
    if not arg.is_conflict_free(lfp, m.attack):
        out.append("grounded extension not conflict-free")
    if arg.characteristic(lfp, m.attack) != lfp:
        out.append("grounded extension is not a fixed point")
    trace = m.grounded.iterations
    if any(not a <= b for a, b in zip(trace, trace[1:])) or trace[-1] != trace[-2]:
        out.append("iteration trace not increasing to a repeat")
    return out


@register("prop31")
def _upward_closure(m: Model) -> list[str]:
    """Every open above a member of the grounded extension is a member."""
    lfp = m.lfp
    return [f"{_fmt(m, f)} in LFP but {_fmt(m, g)} is not"
            for f in lfp for g in m.topology if is_subset(f, g) and g not in lfp]


def _intersection_failures(m: Model) -> list[str]:
    lfp = m.lfp
    return [f"{_fmt(m, a, b)} in LFP, intersection is not"
            for a in lfp for b in lfp if a & b not in lfp]


@register("closure_under_intersection", kind=SUFFICIENT)
def _closure(m: Model) -> list[str]:
    """Grounded extension closed under pairwise intersection (false in general)."""
    return _intersection_failures(m)


@register("prop32")
def _prop32(m: Model) -> list[str]:
    """Transitive, unambiguous or symmetric attacks give an intersection-closed extension."""
    g = m.attack
    if arg.is_symmetric(g) or arg.is_transitive(g) or arg.is_unambiguous(g):
        return _intersection_failures(m)
    return []


@register("lemma_a1")
def _lemma_a1(m: Model) -> list[str]:
    """Pairwise: intersection in LFP iff each of its attackers misses some LFP member."""
    lfp = m.lfp
    out = []
    for a in lfp:
        for b in lfp:
            c = a & b
            right = all(any(not t & f for f in lfp) for t in m.attack.attackers.get(c, ()))
            if c in m.topology and (c in lfp) != right:
                out.append(f"biconditional fails for {_fmt(m, a, b)}")
    return out


@register("prop34")
def _prop34(m: Model) -> list[str]:
    """Justifications are unattacked, and evidence-based belief implies grounded belief."""
    out = []
    j = dx.justification_set(m)
    d0 = arg.characteristic(frozenset(), m.attack)
    if not j <= d0:
        out.append("justification outside d(empty)")
    if not d0 <= m.lfp:
        out.append("d(empty) outside the grounded extension")
    for p in m.domain.propositions():
        if dx.believes_evidence_based(m, p).believed and not m.believes(p):
            out.append(f"Bel without B at {_fmt(m, p)}")
    return out


@register("symmetric_lfp_eq_j")
def _symmetric_j(m: Model) -> list[str]:
    """Under a symmetric relation the grounded extension equals the justifications."""
    if arg.is_symmetric(m.attack) and m.lfp != dx.justification_set(m):
        return ["symmetric relation but LFP differs from the justifications"]
    return []


@register("lfp_oracle")
def _lfp_oracle(m: Model) -> list[str]:
    """Iterated grounded extension equals the least fixed point found by exhaustive scan."""
    if len(m.topology) > 16:
        return []
    brute = oracles.brute_force_lfp(m.attack)
    if brute != m.lfp:
        return [f"iteration {m.domain.format_family(m.lfp)} vs scan {m.domain.format_family(brute)}"]
    return []


@register("vbp_bel")
def _vbp_bel(m: Model) -> list[str]:
    """Maximal-body belief agrees with evidence-based belief on every proposition."""
    out = []
    for p in m.domain.propositions():
        a = dx.believes_maximal_body(m, p).believed
        b = dx.believes_evidence_based(m, p).believed
        if a != b:
            out.append(f"disagree at {_fmt(m, p)}")
    return out


@register("bodies")
def _bodies(m: Model) -> list[str]:
    """Body enumeration and combined evidence match an exhaustive FIP scan."""
    out = []
    mine = {frozenset(b.members) for b in enumerate_bodies(m)}
    if mine != set(oracles.fip_bodies(m.evidence, m.domain.full)):
        out.append("bodies differ from FIP scan")
    mx = {frozenset(b.members) for b in enumerate_bodies(m, maximal=True)}
    if mx != set(oracles.maximal_fip_bodies(m.evidence, m.domain.full)):
        out.append("maximal bodies differ from FIP scan")
    inters = set()
    for b in mine:
        x = m.domain.full
        for e in b:
            x &= e
        inters.add(x)
    if inters != combined_evidence(m):
        out.append("combined evidence differs from body intersections")
    return out


@register("belief_consistency")
def _consistency(m: Model) -> list[str]:
    """Grounded belief is consistent and upward closed."""
    full = m.domain.full
    believed = [m.believes(p) for p in m.domain.propositions()]
    out = [f"believes {_fmt(m, p)} and its complement"
           for p in m.domain.propositions() if believed[p] and believed[full & ~p]]
    for p in m.domain.propositions():
        if believed[p]:
            rest = full & ~p
            sub = rest
            while True:
                if not believed[p | sub]:
                    out.append(f"{_fmt(m, p)} believed but {_fmt(m, p | sub)} not")
                if sub == 0:
                    break
                sub = (sub - 1) & rest
    return out


@register("axioms_sound")
def _axioms(m: Model) -> list[str]:
    """Schemas 4, 5, D, M, N and rule RE are valid."""
    report = logic.check_axioms(m)
    return [f"{r.name} fails at {_fmt(m, *r.witness)}" for r in report.results
            if r.expected_valid and not r.valid]


@register("lfp_eq_neighborhood")
def _lfp_eq_neighborhood(m: Model) -> list[str]:
    """Up-closing the extension and converting back yields it exactly; all three agree modally."""
    nm = logic.to_neighborhood(m)
    back = logic.from_neighborhood(nm)
    out = []
    if back.lfp != nm.neighborhood:
        out.append("grounded extension of the converted model differs from the neighborhood")
    for other, label in ((nm, "neighborhood"), (back, "round trip")):
        diff = logic.modally_equivalent(m, other, max_depth=3)
        if diff:
            out.append(f"{label} model not modally equivalent: {_fmt(m, *diff)}")
    return out


DEFAULT_PROPERTIES = tuple(REGISTRY)


@dataclass(frozen=True)
class NeighborhoodConfig:
    """Sweep input built from a random belief neighborhood model."""

    seed: int
    world_count: int


SweepConfig = Union[GeneratorConfig, NeighborhoodConfig]


def realise(config: SweepConfig) -> Model:
    if isinstance(config, NeighborhoodConfig):
        return logic.from_neighborhood(random_neighborhood_model(config.seed, config.world_count))
    return generate_random_model(config)


@dataclass
class ModelResult:
    config: SweepConfig
    outcomes: dict[str, list[str]]
    seconds: float


@dataclass
class SweepReport:
    properties: tuple[str, ...]
    results: list[ModelResult] = field(default_factory=list)
    counterexamples: list[dict] = field(default_factory=list)
    seconds: float = 0.0

    def failures(self, name: str) -> int:
        return sum(1 for r in self.results if r.outcomes.get(name))

    @property
    def ok(self) -> bool:
        return not any(self.failures(n) for n in self.properties if REGISTRY[n].kind == MUST_HOLD)

    def summary(self) -> list[tuple[str, str, int, int]]:
        return [(n, REGISTRY[n].kind, len(self.results) - self.failures(n), self.failures(n))
                for n in self.properties]

    def to_json(self) -> dict:
        seeds = [r.config.seed for r in self.results]
        return {
            "ok": self.ok,
            "models": len(self.results),
            "seed_range": [min(seeds), max(seeds)] if seeds else None,
            "seconds": round(self.seconds, 3),
            "properties": [{"name": n, "kind": k, "passed": p, "failed": f}
                           for n, k, p, f in self.summary()],
            "counterexamples": self.counterexamples,
        }


def _check_one(args) -> ModelResult:
    names, config = args
    start = time.perf_counter()
    model = realise(config)
    outcomes = {n: REGISTRY[n].check(model) for n in names}
    return ModelResult(config, outcomes, time.perf_counter() - start)


def run_sweep(properties: Iterable[str], configs: Sequence[SweepConfig],
              workers: int = 1) -> SweepReport:
    names = tuple(properties)
    unknown = [n for n in names if n not in REGISTRY]
    if unknown:
        raise UnknownProperty(f"unknown properties: {', '.join(unknown)}")
    start = time.perf_counter()
    jobs = [(names, c) for c in configs]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_check_one, jobs))
    else:
        results = [_check_one(j) for j in jobs]
    report = SweepReport(names, results)
    for r in results:
        for n, msgs in r.outcomes.items():
            if msgs:
                report.counterexamples.append({
                    "property": n,
                    "kind": REGISTRY[n].kind,
                    "seed": r.config.seed,
                    "messages": msgs[:5],
                    "model": model_to_json(realise(r.config)),
                })
    report.seconds = time.perf_counter() - start
    return report


def check_properties(model: Model, names: Iterable[str]) -> dict[str, list[str]]:
    names = list(names)
    unknown = [n for n in names if n not in REGISTRY]
    if unknown:
        raise UnknownProperty(f"unknown properties: {', '.join(unknown)}")
    return {n: REGISTRY[n].check(model) for n in names}


def describe_properties() -> list[tuple[str, str, str]]:
    return [(p.name, p.kind, p.doc) for p in REGISTRY.values()]


