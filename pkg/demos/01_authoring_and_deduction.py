"""Author a document, validate it, and see what it entails.

The animals document declares five constraints over four types; running the
closure surfaces three more, each with a proof tree made from the eight
inference rules (plus explicit symmetry steps for E and I).
"""

from ologism import data, deduce, reading
from ologism.core import validate

animals = data.load("animals")

print(f"document {animals.name!r}")
for t in animals.types:
    print(f"  type {t.id}: {t.label}")
for p in animals.premisses:
    print(f"  premiss {p}: \"{reading(p, animals)}\"")

problems = validate(animals)
print(f"\nstructural diagnostics: {problems or 'none'}")

theory = deduce.close(animals)
print("\nderived beyond the premisses:")
for p in sorted(theory.derived_beyond_premisses(), key=lambda p: p.sort_key()):
    print(f"  {p}: \"{reading(p, animals)}\"")

print("\nwhy does O(V,A) hold?  (some vertebrate does not fly)")
print(deduce.explain(theory, next(iter({p for p in theory.o_star if p.subject == 'V'}))).render(1))

print("\nwhy does I(A,V) hold?  (the symmetry step mirrors flipping a diagram)")
from ologism.core import I
print(deduce.explain(theory, I("A", "V")).render(1))

print(f"\ncontradictions: {deduce.contradictions(theory) or 'none - the document is consistent'}")
