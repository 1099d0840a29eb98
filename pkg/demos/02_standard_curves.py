"""J+ and rotation of the standard curves K_j and the inner-loop curves A_j."""
from jplus.invariants import report
from jplus.templates import inner_loop_curve, standard_curve

print(" j   K_j: n  rot   J+    A_j: n  rot   J+  slack")
for j in range(-6, 7):
    k = report(standard_curve(j))
    line = f"{j:>2}   {k.n:>6} {k.rot_combinatorial:>4} {k.jplus:>4}"
    if j > 0:
        a = report(inner_loop_curve(j))
        line += f"   {a.n:>7} {a.rot_combinatorial:>4} {a.jplus:>4} {a.arnold_slack:>6}"
    print(line)
