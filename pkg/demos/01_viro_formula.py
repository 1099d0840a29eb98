"""Labels and J+ of a circle carrying a single and a double interior loop."""
from jplus import gallery
from jplus.invariants import jplus_viro, report

d = gallery.worked_example()
print("windings :", sorted(d.windings))
print("indices  :", sorted(d.indices))
sw = sum(w * w for w in d.windings)
si = sum(i * i for i in d.indices)
print(f"J+ = 1 + n - sum w^2 + sum ind^2 = 1 + {d.n} - {sw} + {si} = {1 + d.n - sw + si}")
assert jplus_viro(d) == 1 + d.n - sw + si
print()
print(report(d).to_text())
