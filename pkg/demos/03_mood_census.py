"""Classify all 256 syllogistic forms.

Fifteen are valid outright.  Nine more become valid once an existential
import premiss I(X,X) is supplied for the right term; those nine are exactly
the forms with two universal premisses and a particular conclusion.
"""

from collections import Counter

from ologism.syll import enumerate_moods

records = enumerate_moods(with_import=True)
direct = [r for r in records if r.valid_direct]
with_import = [r for r in records if r.valid and not r.valid_direct]

print(f"forms examined: {len(records)}")
print(f"valid outright: {len(direct)}")
for r in direct:
    print(f"  {r.mood}")

print(f"\nvalid under existential import: {len(with_import)}")
for r in with_import:
    print(f"  {r.mood}   (import on {', '.join(r.import_terms)})")

print("\nwhy the rest are rejected:")
reasons = Counter(r.rejection for r in records if not r.valid)
for reason, count in reasons.most_common():
    print(f"  {reason}: {count}")
