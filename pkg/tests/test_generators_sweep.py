from fractions import Fraction

import pytest

from topoarg import argumentation as arg
from topoarg.core import model_from_json
from topoarg.errors import ModelError, UnknownProperty
from topoarg.generators import (GeneratorConfig, generate_random_model, random_measure,
                                random_neighborhood_model, sweep_configs)
from topoarg.probabilistic import mu_attack
from topoarg.sweep import (MUST_HOLD, REGISTRY, SUFFICIENT, NeighborhoodConfig, check_properties,
                           describe_properties, run_sweep)
from topoarg.topology import generate_topology


def test_seed_determines_model():
    c = GeneratorConfig(world_count=3, attack_mode="symmetric", seed=7)
    assert generate_random_model(c) == generate_random_model(c)
    other = [generate_random_model(GeneratorConfig(world_count=3, seed=s)) for s in range(5)]
    assert len({tuple(sorted(m.attack.edges)) for m in other}) > 1


@pytest.mark.parametrize("bad", [dict(world_count=0), dict(world_count=17),
                                 dict(evidence_density=1.5), dict(attack_mode="chaotic"),
                                 dict(world_count=2, weights=[1])])
def test_config_validation(bad):
    with pytest.raises(ModelError):
        GeneratorConfig(**bad)


def test_thousand_seeds_valid():
    for cfg in sweep_configs(1000):
        assert arg.validate_attack(generate_random_model(cfg).attack) == []


def test_uniform_weights_match_mu_attack():
    for n in range(1, 5):
        config = GeneratorConfig(world_count=n, evidence_density=1.0, attack_mode="measure",
                                 weights=[1] * n, seed=n)
        model = generate_random_model(config)
        assert model.topology.is_discrete
        uniform = random_measure(0, n)
        uniform = type(uniform)(uniform.domain, {w: Fraction(1, n) for w in uniform.domain.labels}, {})
        assert model.attack.edges == mu_attack(uniform).edges


def test_random_neighborhoods_valid():
    for seed in range(50):
        nm = random_neighborhood_model(seed, 1 + seed % 4)
        assert nm.domain.full in nm.neighborhood


def test_registry_kinds():
    assert REGISTRY["closure_under_intersection"].kind == SUFFICIENT
    assert all(p.kind == MUST_HOLD for n, p in REGISTRY.items() if n != "closure_under_intersection")
    assert all(doc for _, _, doc in describe_properties())


def test_unknown_property():
    with pytest.raises(UnknownProperty):
        run_sweep(["nope"], [])
    with pytest.raises(UnknownProperty):
        check_properties(None, ["nope"])


def test_symmetric_sweep():
    report = run_sweep(["prop31", "prop34"], sweep_configs(200, modes=("symmetric",)))
    assert report.ok and len(report.results) == 200


def test_sufficient_failures_do_not_fail_run(fig1):
    assert check_properties(fig1, ["closure_under_intersection"])["closure_under_intersection"]
    report = run_sweep(["closure_under_intersection"], sweep_configs(200))
    assert report.failures("closure_under_intersection") > 0
    assert report.ok
    data = report.to_json()
    assert data["ok"] and data["seed_range"] == [0, 199]


def test_counterexamples_reproduce():
    report = run_sweep(["closure_under_intersection"], sweep_configs(200))
    for cx in report.counterexamples:
        model = model_from_json(cx["model"], strict=True)
        assert check_properties(model, [cx["property"]])[cx["property"]][:5] == cx["messages"]


def test_neighborhood_sweep():
    configs = [NeighborhoodConfig(s, 1 + s % 4) for s in range(100)]
    assert run_sweep(["lfp_eq_neighborhood"], configs).ok


def test_parallel_matches_serial():
    configs = sweep_configs(24)
    serial = run_sweep(["prop31", "lfp_oracle"], configs)
    parallel = run_sweep(["prop31", "lfp_oracle"], configs, workers=2)
    assert serial.summary() == parallel.summary()


def test_fig1_passes_must_hold(fig1):
    outcomes = check_properties(fig1, list(REGISTRY))
    assert all(not msgs for n, msgs in outcomes.items() if REGISTRY[n].kind == MUST_HOLD)
