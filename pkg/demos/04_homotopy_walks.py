"""A seeded random regular homotopy with its J+ ledger."""
import sys

from jplus.diagram import CurveDiagram, trace_diagram
from jplus.moves import random_homotopy
from jplus.templates import standard_curve

seed = int(sys.argv[1]) if len(sys.argv) > 1 else 1
d = trace_diagram(standard_curve(2))
t = random_homotopy(CurveDiagram(d.word, d.signs, d.outer), 40, seed=seed, max_crossings=20)
for i, s in enumerate(t.steps):
    print(f"{i:>3} {s.site.kind:<24} dJ={s.delta_jplus:+d} J+={s.running_jplus:>4} n={s.n}")
print(f"direct +: {t.d_plus}, direct -: {t.d_minus}, final J+ {t.final_jplus}")
