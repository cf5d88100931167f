"""Classifying number-field records by the coclass of the second 3-class
group.

The bundled fixtures transcribe the published minimal-discriminant and
minimal-conductor tables for four field families; classification needs
nothing but the four extension invariants per row.
"""

from coclasslab import classify, discriminant_from_conductor, minimal_table
from coclasslab.fields import FAMILIES, load_fixture
from coclasslab.invariants import format_log

for family in FAMILIES:
    records = load_fixture(family)
    print(f"{family} ({len(records)} rows):")
    for rec in records:
        verdict, copol = classify(rec)
        tau = ",".join(format_log(t) for t in rec.tau)
        flag = " [abelian]" if verdict.abelian else ""
        print(f"  {rec.label:>10}: tau = ({tau})  -> cc {verdict.coclass}"
              f"{flag}, co-polarization lo {copol}")
    minima = minimal_table(records, family)
    line = ", ".join(f"cc {cc}: {r.label}" for cc, r in minima.items())
    print(f"  minimal labels: {line}")
    print()

print("conductor-discriminant bookkeeping for the cubic and sextic rows:")
for family, f in [("cyclic-cubic", 657), ("pure-sextic", 30)]:
    print(f"  {family} f = {f}: d = {discriminant_from_conductor(family, f)}")
