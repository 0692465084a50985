"""The zoo story: conflicting reports about a newly exhibited animal.

Worlds: 1 penguin, 2 pterosaur, 3 bat.  Colleagues report each animal, and two
trusted ones report that it flies and that it is not a mammal.
"""

from topoarg import fixture_path, load_model
from topoarg.logic import extension, parse

model = load_model(fixture_path("zoo"))
full = model.domain.full

for text in ("B flies", "B not_mammal", "B pterosaur", "B (flies & not_mammal)",
             "B (penguin | bat)"):
    believed = extension(model, parse(text)) == full
    print(f"{text:28} {believed}")
