"""Three worlds, five pieces of evidence and an asymmetric attack relation.

Shows how the grounded extension is reached, why belief is not closed under
conjunction here, and how grounded belief compares with evidence-based belief.
"""

from topoarg import doxastics as dx
from topoarg import fixture_path, load_model

model = load_model(fixture_path("fig1"))
d = model.domain

print("opens:", d.format_family(model.topology.opens))
for i, step in enumerate(model.grounded.iterations):
    print(f"  F{i} = {d.format_family(step)}")
print("grounded extension:", d.format_family(model.lfp))

# {1,2} and {2,3} are both unattacked; their intersection {2} is attacked by {1,3}
# and nothing in the extension answers that attack.
for labels in ("12", "23", "2"):
    v = dx.believes_grounded(model, d.mask(labels))
    print(f"B{d.format(d.mask(labels))}: {v.believed}")

cmp = dx.compare_beliefs(model)
print("believed (grounded):", d.format_family(cmp.grounded_beliefs))
print("believed (evidence-based):", d.format_family(cmp.evidence_beliefs))
