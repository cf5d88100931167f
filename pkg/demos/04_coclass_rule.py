"""The coclass rule and the regular pattern prediction.

The second-largest 3-class number among the four unramified cyclic cubic
extensions determines the coclass outright: cc = log3(h_2) - 1 for
non-abelian M (and log3(h_2) in the abelian case).  Conversely, class,
coclass and defect predict the whole transfer target type inside the
regular range.
"""

from coclasslab import coclass_from_class_numbers, exceptions_table, predict_ttt
from coclasslab.invariants import format_log
from coclasslab.rules import TreeTag, in_regular_range

print("the rule on three published class-number patterns:")
for es, where in [((3, 3, 3, 3), "|d| = 3896"),
                  ((2, 3, 2, 2), "d = 32009"),
                  ((3, 9, 3, 11), "|d| = 99888340")]:
    v = coclass_from_class_numbers(*es)
    print(f"  log3 h = {es} ({where}) -> coclass {v.coclass}")

print()
print("predicted tau for growing class at coclass 2 (tree with")
print("stabilization ((21),(21))):")
for c in range(5, 10):
    tau1, tau2 = predict_ttt(c, 2, 0, TreeTag.T54)
    print(f"  c = {c}: tau1 = ({','.join(format_log(t) for t in tau1)})"
          f"  tau2 = {format_log(tau2)}")

print()
print("outside the regular range the exceptions table speaks instead:")
row = exceptions_table((243, 5))
print(f"  <243,5>: c={row.c} r={row.r} k={row.k}  "
      f"tau1 = ({','.join(format_log(t) for t in row.tau1)}) "
      f"[{'regular' if row.tau1_regular else 'irregular'}]")
row = exceptions_table((729, 56))
print(f"  <729,56>: tau2 = {format_log(row.tau2)} "
      f"[{'regular' if row.tau2_regular else 'irregular'}]")

print()
print("the regular range itself:")
for (c, r, k) in [(4, 1, 0), (3, 1, 0), (4, 2, 0), (4, 2, 1), (6, 4, 1)]:
    print(f"  (c={c}, r={r}, k={k}): "
          f"{'regular' if in_regular_range(c, r, k) else 'needs the table'}")
