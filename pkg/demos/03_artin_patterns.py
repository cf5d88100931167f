"""Artin patterns of the catalog groups.

For each group with elementary bicyclic abelianization, the four maximal
subgroups carry transfer homomorphisms G/G' -> H/H'; the target types
(tau) and kernel types (kappa) together form the Artin pattern, the
fingerprint that lets number theorists identify second 3-class groups
from field data alone.
"""

from coclasslab import artin_pattern, catalog, descriptor, realize
from coclasslab.artin import ct_label

print("the seven coclass-2 groups of order 243 and their patterns:")
print(f"{'group':>10}  {'(c,r,k)':>9}  {'pattern':<52} CT")
for index in range(3, 10):
    entry = catalog.lookup((243, index))
    g = realize(entry.presentation)
    d = descriptor(g)
    ap = artin_pattern(g)
    print(f"  <243,{index}>  ({d.c},{d.r},{d.k})    {str(ap):<52} "
          f"{ct_label(ap.kappa) or '-'}")

print()
print("kappa digits: 0 marks a total transfer kernel, digit j says the")
print("kernel is H_j/G'.  Two groups sharing a tau multiset are told apart")
print("by their kappa equivalence class (e.g. <243,5> vs <243,6> above).")

print()
print("the defect-1 groups of order 729 with homocyclic derived subgroup:")
for index in (34, 56):
    entry = catalog.lookup((729, index))
    g = realize(entry.presentation)
    ap = artin_pattern(g)
    print(f"  <729,{index}>: tau2 = {ap.tau2}, kappa {ap.kappa_string()} "
          f"~ CT {ct_label(ap.kappa)}")
