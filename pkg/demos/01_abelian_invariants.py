"""Abelian type invariants in logarithmic form.

Every finite abelian 3-group is a product of cyclic factors 3^m; we store
the descending exponent tuple and write it compactly, so (9,3,3,3,3)
becomes (21^4).  The nearly homocyclic family A(3,n), rank at most two
with exponents as equal as possible, is the building block for everything
downstream.
"""

from coclasslab import (
    ati,
    ati_from_order_counts,
    direct_product,
    format_log,
    nearly_homocyclic,
    parse_log,
)

print("The nearly homocyclic family A(3,n) for n = 0..13:")
for n in range(14):
    a = nearly_homocyclic(n)
    shown = " x ".join(str(o) for o in a.orders()) or "1"
    print(f"  A(3,{n:>2}) = {format_log(a):>7}   i.e. ({shown})")

print()
print("Text forms parse back to the same type:")
for text in ["(21^4)", "(4^23^2)", "()", "(0)", "(65)"]:
    a = parse_log(text)
    print(f"  {text:>8} -> exponents {a.exponents} -> {format_log(a)}")

print()
print("Direct products merge the exponent multisets:")
x = direct_product(nearly_homocyclic(2), nearly_homocyclic(1))
print(f"  A(3,2) x A(3,1) = {x}            (the derived subgroup of the")
print("                                     order-243 coclass-2 groups)")
print(f"  A(3,2) x A(3,2) = {nearly_homocyclic(2) * nearly_homocyclic(2)}"
      "          (the irregular homocyclic case)")

print()
print("A group is recovered from its order census: counting solutions of")
print("x^(3^k) = 1 determines the type uniquely.")
census = {0: 1, 1: 9, 2: 27, 3: 27}
print(f"  census {census} -> {ati_from_order_counts(census)} = (9,3)")
assert ati_from_order_counts(census) == ati(2, 1)
