"""Seeded random models for property sweeps."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import argumentation as arg
from .core import AttackSpec, Domain, Model, build_model
from .errors import GenerationRetryExhausted, ModelError
from .logic import NeighborhoodModel, up_closure
from .probabilistic import ProbabilisticModel
from .topology import DEFAULT_MAX_WORLDS, generate_topology

ATTACK_MODES = ("explicit-random", "symmetric", "measure", "transitive", "unambiguous")
MAX_RETRIES = 200


@dataclass(frozen=True)
class GeneratorConfig:
    world_count: int = 3
    evidence_density: float = 0.35
    attack_mode: str = "explicit-random"
    seed: int = 0
    weights: Optional[Sequence[int]] = None   # measure mode; random when omitted
    max_worlds: int = DEFAULT_MAX_WORLDS

    def __post_init__(self):
        if not 1 <= self.world_count <= self.max_worlds:
            raise ModelError(f"world_count must be in 1..{self.max_worlds}")
        if not 0.0 <= self.evidence_density <= 1.0:
            raise ModelError("evidence_density must lie in [0, 1]")
        if self.attack_mode not in ATTACK_MODES:
            raise ModelError(f"unknown attack mode {self.attack_mode!r}")
        if self.weights is not None and len(self.weights) != self.world_count:
            raise ModelError("one weight per world is required")


def _labels(n: int) -> tuple[str, ...]:
    return tuple(str(i + 1) for i in range(n))


def _random_evidence(rng: random.Random, n: int, density: float) -> list[int]:
    full = (1 << n) - 1
    for _ in range(MAX_RETRIES):
        pieces = [s for s in range(1, full) if rng.random() < density]
        if pieces or n == 1:
            return pieces + [full]
    raise GenerationRetryExhausted(
        f"density {density} gave no evidence besides the whole domain {MAX_RETRIES} times")


def _random_valuation(rng: random.Random, n: int) -> dict[str, int]:
    full = (1 << n) - 1
    return {"p": rng.randint(0, full), "q": rng.randint(0, full)}


def generate_random_model(config: GeneratorConfig) -> Model:
    """A valid model determined entirely by ``config``."""
    rng = random.Random(config.seed)
    n = config.world_count
    labels = _labels(n)
    full = (1 << n) - 1
    for _ in range(MAX_RETRIES):
        evidence = _random_evidence(rng, n, config.evidence_density)
        valuation = _random_valuation(rng, n)
        mode = config.attack_mode
        if mode == "symmetric":
            spec = AttackSpec("symmetric")
        elif mode == "measure":
            weights = config.weights or [rng.randint(1, 5) for _ in range(n)]
            spec = AttackSpec("measure", weights=dict(zip(labels, weights)))
        else:
            topology = generate_topology(evidence, full, max_worlds=config.max_worlds)
            if mode == "explicit-random":
                graph = arg.random_attack(topology, rng)
            else:
                graph = arg.search_attack(topology, rng, mode)
                if graph is None:
                    continue
            spec = AttackSpec("explicit", pairs=tuple(graph.nonempty_edges))
        return build_model(labels, evidence, spec, valuation, strict=True,
                           max_worlds=config.max_worlds)
    raise GenerationRetryExhausted(f"no {config.attack_mode} relation found in {MAX_RETRIES} topologies")


def random_neighborhood_model(seed: int, world_count: int) -> NeighborhoodModel:
    """Grow a belief neighborhood by adding random sets while the invariants hold."""
    rng = random.Random(seed)
    n = world_count
    full = (1 << n) - 1
    domain = Domain(_labels(n))
    neighborhood = frozenset([full])
    candidates = list(range(1, full))
    rng.shuffle(candidates)
    for b in candidates[: rng.randint(0, len(candidates))]:
        grown = up_closure(neighborhood | {b}, full)
        if all(full & ~c not in grown for c in grown):
            neighborhood = grown
    return NeighborhoodModel(domain, neighborhood, _random_valuation(rng, n))


def random_measure(seed: int, world_count: int, max_numerator: int = 9) -> ProbabilisticModel:
    """Strictly positive rational measure with random integer proportions."""
    rng = random.Random(seed)
    raw = [rng.randint(1, max_numerator) for _ in range(world_count)]
    total = sum(raw)
    domain = Domain(_labels(world_count))
    mu = {w: Fraction(r, total) for w, r in zip(domain.labels, raw)}
    return ProbabilisticModel(domain, mu, _random_valuation(rng, world_count))


def sweep_configs(count: int, modes: Sequence[str] = ("explicit-random", "symmetric", "measure"),
                  max_world_count: int = 4, base_seed: int = 0,
                  density: float = 0.35, min_world_count: int = 1) -> list[GeneratorConfig]:
    """``count`` configs cycling through ``modes``, world counts drawn per seed."""
    out = []
    for k in range(count):
        seed = base_seed + k
        n = random.Random(seed * 7919 + 17).randint(min_world_count, max_world_count)
        out.append(GeneratorConfig(world_count=n, evidence_density=density,
                                   attack_mode=modes[k % len(modes)], seed=seed))
    return out
