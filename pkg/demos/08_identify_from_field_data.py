"""Identifying a second 3-class group from field data.

Given a number field's four extension invariants and its capitulation
type, which groups could be its second 3-class group?  The coclass rule
narrows the order first; matching the tau1 multiset and the kappa
equivalence class against the catalog does the rest, and shows exactly
where the first-layer data stops being decisive.
"""

from coclasslab import artin_pattern, catalog, classify, realize
from coclasslab.artin import kappa_equivalent
from coclasslab.fields import load_fixture
from coclasslab.invariants import format_log

record = next(r for r in load_fixture("real-quadratic") if r.label == 214712)
verdict, copol = classify(record)
tau_text = ",".join(format_log(t) for t in record.tau)
print(f"real quadratic field, discriminant {record.label}:")
print(f"  tau = ({tau_text}), kappa = ({record.kappa}), CT {record.ct}")
print(f"  coclass rule: cc(M) = {verdict.coclass} "
      f"(second largest class number is 3^{copol})")

print()
print("catalog groups whose first-layer pattern matches:")
want_tau = sorted(record.tau)
want_kappa = tuple(int(ch) for ch in record.kappa)
matches = []
for gid in catalog.catalog_ids():
    g = realize(catalog.lookup(gid).presentation)
    ap = artin_pattern(g)
    if sorted(ap.tau1) == want_tau and kappa_equivalent(ap.kappa, want_kappa):
        matches.append((gid, g, ap))
for gid, g, ap in matches:
    print(f"  <{gid[0]},{gid[1]}>: order 3^{g.log_order}, "
          f"tau2 = {format_log(ap.tau2)}")

print()
print("the IPAD plus kappa pins the pattern but not the order: the")
print("second-layer target tau2 (equivalently, deeper class-field data)")
print("separates the candidates above.")
