"""Interior and tunnel sums: predicted and realized J+ side by side."""
from jplus import gallery
from jplus.constructions import add_interior_loop, interior_sum, tunnel_interior_sum
from jplus.diagram import trace_diagram
from jplus.invariants import jplus_viro, rotation_from_windings
from jplus.templates import standard_curve

k, k2, spec = gallery.interior_sum_pair()
print(f"K : J+ {jplus_viro(k)}, rot {rotation_from_windings(k)}")
print(f"K': J+ {jplus_viro(k2)}, rot {rotation_from_windings(k2)}")
for fn in (interior_sum, tunnel_interior_sum):
    res = fn(spec)
    got = trace_diagram(res.curve)
    print(f"{res.formula_tag:<20} predicted J+ {res.predicted_jplus:>4} rot {res.predicted_rot:>2}"
          f" | realized J+ {jplus_viro(got):>4} rot {rotation_from_windings(got):>2}"
          f" (w(C)={res.omega_c}, w_adj={res.omega_adj})")

circle = trace_diagram(standard_curve(1))
inside = 1 - circle.outer_face
for m in range(4):
    res = add_interior_loop(circle, inside, 0, m)
    print(f"circle + {m + 1}-fold loop: J+ {jplus_viro(res.diagram)}")
