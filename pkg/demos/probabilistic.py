"""Probabilistic belief as grounded belief under a measure-based attack relation."""

from topoarg import argumentation as arg
from topoarg import fixture_path
from topoarg.core import load_json
from topoarg.generators import random_measure
from topoarg.probabilistic import mu_attack, pb_grounded_correspondence, pmodel_from_json

pm = pmodel_from_json(load_json(fixture_path("uniform3")))
d = pm.domain
for labels in ("12", "23", "2"):
    s = d.mask(labels)
    print(f"mu{d.format(s)} = {pm.measure(s)}, believed: {pm.believes(s)}")

c = pb_grounded_correspondence(pm)
print("grounded extension:", d.format_family(c.grounded))
print("sets above one half:", d.format_family(c.threshold_sets))

g = mu_attack(pm)
print("{2} attacked by {1,3}:", g.attacks(d.mask("13"), d.mask("2")))
print("{1,3} attacked by {2}:", g.attacks(d.mask("2"), d.mask("13")))
print("conditional transitivity failures:", len(arg.conditional_transitivity_violations(g)))

bad = [s for s in range(50) if not pb_grounded_correspondence(random_measure(s, 4)).holds]
print(f"50 random measures on four worlds: {len(bad)} failures")
