"""Check the belief axioms on a fixed model and on a batch of random ones."""

from topoarg import fixture_path, load_model, logic
from topoarg.generators import sweep_configs
from topoarg.sweep import realise

model = load_model(fixture_path("fig1"))
report = logic.check_axioms(model)
for r in report.results:
    witness = "" if r.witness is None else " at " + ", ".join(model.format(w) for w in r.witness)
    print(f"{r.name:3} {logic.to_text(r.formula):40} {'valid' if r.valid else 'fails' + witness}")

seeds = 100
broken = [c.seed for c in sweep_configs(seeds) if not logic.check_axioms(realise(c)).sound]
print(f"{seeds} random models (seeds 0..{seeds - 1}): {len(broken)} unsound")
