"""Acceptance suite: one check per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines inline, or
as a script: ``python3 tests/test_acceptance.py``.  A summary is also
printed at the end of any pytest run that includes this file.
"""

import time
from fractions import Fraction

import pytest

from topoarg import argumentation as arg
from topoarg import doxastics as dx
from topoarg import fixture_path, load_model, logic
from topoarg.core import load_json
from topoarg.generators import (generate_random_model, random_measure, random_neighborhood_model,
                                sweep_configs)
from topoarg.probabilistic import mu_attack, pb_grounded_correspondence, pmodel_from_json
from topoarg.sweep import NeighborhoodConfig, realise, run_sweep

SWEEP = sweep_configs(200, max_world_count=4)
RESULTS: dict[int, tuple[bool, str]] = {}


def _lfp_from_labels(model, *sets):
    return frozenset(model.domain.mask(s) for s in sets)


def criterion_1():
    model = load_model(fixture_path("fig1"))
    d = model.domain
    ok = (set(model.topology.opens) == set(d.propositions())
          and model.lfp == _lfp_from_labels(model, "12", "23", "123")
          and model.believes(d.mask("12")) and model.believes(d.mask("23"))
          and not model.believes(d.mask("2")))
    return ok, f"tau = 2^X, LFP = {d.format_family(model.lfp)}"


def criterion_2():
    report = run_sweep(["axioms_sound"], SWEEP)
    return report.ok, f"{len(report.results)} models, {report.failures('axioms_sound')} failures"


def criterion_3():
    model = load_model(fixture_path("fig1"))
    c = logic.check_axioms(model)["C"]
    d = model.domain
    ok = not c.valid and c.witness == (d.mask("12"), d.mask("23"))
    shown = " ".join(d.format(w) for w in c.witness or ())
    return ok, f"C valid={c.valid}, witness {shown}"


def criterion_4():
    report = run_sweep(["prop31", "prop34"], SWEEP)
    return report.ok, (f"{len(report.results)} models, prop31 failures {report.failures('prop31')}, "
                       f"prop34 failures {report.failures('prop34')}")


def criterion_5():
    failures = []
    kinds = {"symmetric": arg.is_symmetric, "transitive": arg.is_transitive,
             "unambiguous": arg.is_unambiguous}
    counted = {}
    for kind, check in kinds.items():
        configs = sweep_configs(100, modes=(kind,), density=0.5, min_world_count=2)
        nontrivial = 0
        for config in configs:
            model = generate_random_model(config)
            lfp = model.lfp
            if not check(model.attack):
                failures.append(f"{kind} seed {config.seed}: relation lacks the property")
            if any(a & b not in lfp for a in lfp for b in lfp):
                failures.append(f"{kind} seed {config.seed}: LFP not intersection-closed")
            if kind == "symmetric" and lfp != dx.justification_set(model):
                failures.append(f"symmetric seed {config.seed}: LFP differs from J")
            nontrivial += len(lfp) > 1
        counted[kind] = nontrivial
    detail = ", ".join(f"{k}: 100 models ({n} with |LFP| > 1)" for k, n in counted.items())
    return not failures, detail + ("" if not failures else f"; {failures[:3]}")


def criterion_6():
    configs = [NeighborhoodConfig(seed, 1 + seed % 4) for seed in range(100)]
    bad = 0
    for config in configs:
        nm = random_neighborhood_model(config.seed, config.world_count)
        if realise(config).lfp != nm.neighborhood:
            bad += 1
    return bad == 0, f"100 neighborhood models, {bad} mismatches"


def criterion_7():
    compared = 0
    report = run_sweep(["lfp_oracle"], SWEEP)
    for config in SWEEP:
        if len(realise(config).topology) <= 16:
            compared += 1
    mismatches = report.failures("lfp_oracle")
    return mismatches == 0 and compared == len(SWEEP), (
        f"{compared} models with |tau| <= 16 compared, {mismatches} mismatches")


def criterion_8():
    report = run_sweep(["vbp_bel"], SWEEP)
    props = sum(1 << generate_random_model(c).domain.size for c in SWEEP)
    return report.ok, f"{props} propositions over {len(SWEEP)} models, {report.failures('vbp_bel')} mismatches"


def criterion_9():
    failures = []
    for seed in range(100):
        pm = random_measure(seed, 1 + seed % 4)
        c = pb_grounded_correspondence(pm)
        if not c.holds:
            failures.append(seed)
        assert all(isinstance(m, Fraction) for m in pm.mu.values())
    uniform = pmodel_from_json(load_json(fixture_path("uniform3")))
    d = uniform.domain
    witness = (uniform.believes(d.mask("12")) and uniform.believes(d.mask("23"))
               and not uniform.believes(d.mask("2")))
    c = pb_grounded_correspondence(uniform)
    ok = not failures and witness and c.holds and not arg.validate_attack(mu_attack(uniform))
    return ok, (f"100 measures, {len(failures)} failures; uniform 1/3: PB{{1,2}} and PB{{2,3}} "
                f"but not PB{{2}}: {witness}")


CRITERIA = [
    (1, "three-world model reproduction", criterion_1, 1.0),
    (2, "axiom soundness sweep", criterion_2, 30.0),
    (3, "non-theorem C witness", criterion_3, 1.0),
    (4, "upward closure and Bel implies B", criterion_4, None),
    (5, "intersection closure under symmetric/transitive/unambiguous", criterion_5, None),
    (6, "neighborhood conversion LFP = N", criterion_6, 30.0),
    (7, "iterated LFP equals exhaustive oracle", criterion_7, None),
    (8, "maximal-body belief equals Bel", criterion_8, None),
    (9, "probabilistic correspondence", criterion_9, 60.0),
]


def evaluate(number, title, fn, limit):
    start = time.perf_counter()
    ok, detail = fn()
    seconds = time.perf_counter() - start
    if limit is not None and seconds >= limit:
        ok = False
        detail += f"; exceeded {limit:g}s"
    line = f"criterion {number} [{'PASS' if ok else 'FAIL'}] {title}: {detail} ({seconds:.2f}s)"
    RESULTS[number] = (ok, line)
    print(line)
    return ok, line


@pytest.mark.parametrize("number,title,fn,limit", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, fn, limit):
    ok, line = evaluate(number, title, fn, limit)
    assert ok, line


if __name__ == "__main__":
    import sys
    outcomes = [evaluate(*c)[0] for c in CRITERIA]
    sys.exit(0 if all(outcomes) else 1)
