"""Round trip between argumentation models and belief neighborhood models."""

from topoarg import fixture_path, load_model, logic

model = load_model(fixture_path("fig1"))
nm = logic.to_neighborhood(model)
print("neighborhood:", model.domain.format_family(nm.neighborhood))

back = logic.from_neighborhood(nm)
print("evidence of the rebuilt model:", model.domain.format_family(back.evidence))
print("its grounded extension:", model.domain.format_family(back.lfp))
print("equals the neighborhood:", back.lfp == nm.neighborhood)

diff = logic.modally_equivalent(model, back, max_depth=None)
print("modally equivalent:", diff is None)
