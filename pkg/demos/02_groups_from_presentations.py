"""Realizing finite 3-groups from presentations.

Coset enumeration over the trivial subgroup turns a presentation into the
regular action of the group on itself; from there, central series,
subgroups and quotient invariants are exact computations.
"""

from coclasslab import descriptor, parse_presentation, realize
from coclasslab.invariants import format_log

heisenberg = parse_presentation("""
    gens x y
    x^3
    y^3
    [[y,x],x]
    [[y,x],y]
""")
g = realize(heisenberg)
print(f"extraspecial exponent-3 group: order {g.order}")
print(f"  descriptor {descriptor(g)}")
print(f"  lower central orders: {[s.order for s in g.lower_central_series]}")
print(f"  centre order: {g.centre.order}")

print()
wreath = parse_presentation("""
    gens x y
    x^3
    y^3
    [y,(Xyx)]
    [y,(XXyxx)]
""")
g = realize(wreath)
print(f"the order-81 wreath-type group: descriptor {descriptor(g)}")
print("  maximal subgroup abelianizations:")
for h in g.maximal_subgroups:
    aqi = g.abelian_quotient_invariants(h)
    print(f"    order {h.order}: H/H' = {format_log(aqi)}"
          + ("   <- the elementary abelian one" if aqi.rank == 3 else ""))

print()
print(f"  normal subgroups: {len(g.normal_subgroups)}, orders "
      f"{sorted(h.order for h in g.normal_subgroups)}")

print()
print("an infinite presentation trips the enumeration bound:")
from coclasslab.errors import EnumerationOverflow
try:
    realize(parse_presentation("gens x y\n[y,x]"), order_bound=81)
except EnumerationOverflow as exc:
    print(f"  EnumerationOverflow: {exc}")
